// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sublab/continuous.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "sublab/errors.h"
#include "sublab/random.h"

namespace sublab {
namespace {

void RequireShape(const Vector& b, const Matrix& a) {
  GroundSet::Make(static_cast<int>(b.size()));
  if (a.rows() != b.size() || a.cols() != b.size()) {
    throw InvalidArgument("quadratic: A must be n x n with n = |b|");
  }
  if (!b.allFinite() || !a.allFinite()) {
    throw InvalidArgument("quadratic: coefficients must be finite");
  }
  if ((a - a.transpose()).cwiseAbs().maxCoeff() != 0.0) {
    throw InvalidArgument("quadratic: A must be symmetric");
  }
}

// Minimum of F over the vertices of the cube.
double MinOverVertices(const Vector& b, const Matrix& a) {
  const int n = static_cast<int>(b.size());
  RequireAtMost(n, 20, "vertex minimum");
  double lowest = std::numeric_limits<double>::infinity();
  Vector x(n);
  for (Subset::Mask m = 0; m < (Subset::Mask{1} << n); ++m) {
    for (int i = 0; i < n; ++i) x[i] = (m >> i) & 1u ? 1.0 : 0.0;
    lowest = std::min(lowest, b.dot(x) + 0.5 * x.dot(a * x));
  }
  return lowest;
}

}  // namespace

std::string_view ToString(QuadraticKind kind) {
  switch (kind) {
    case QuadraticKind::kDR:
      return "quadratic-dr";
    case QuadraticKind::kPositive:
      return "quadratic-positive";
    case QuadraticKind::kGeneral:
      return "quadratic";
  }
  return "quadratic";
}

QuadraticKind QuadraticKindFromString(std::string_view name) {
  if (name == "quadratic-dr") return QuadraticKind::kDR;
  if (name == "quadratic-positive") return QuadraticKind::kPositive;
  if (name == "quadratic") return QuadraticKind::kGeneral;
  throw InvalidArgument("unknown quadratic kind: " + std::string(name));
}

QuadraticFunction::QuadraticFunction(QuadraticKind kind, Vector b, Matrix a,
                                     double offset)
    : kind_(kind), b_(std::move(b)), a_(std::move(a)), offset_(offset) {
  RequireShape(b_, a_);
  // max row L1 norm bounds the spectral norm of a symmetric matrix
  smoothness_ = a_.cwiseAbs().rowwise().sum().maxCoeff();
  const Vector lo = b_ + a_.cwiseMin(0.0).rowwise().sum();
  const Vector hi = b_ + a_.cwiseMax(0.0).rowwise().sum();
  lipschitz_ = lo.cwiseAbs().cwiseMax(hi.cwiseAbs()).norm();
  monotone_ = (lo.array() >= 0.0).all();
}

QuadraticFunction QuadraticFunction::MakeDR(Vector b, Matrix a,
                                            bool require_monotone) {
  RequireShape(b, a);
  if ((a.array() > 0.0).any()) {
    throw InvalidArgument("DR quadratic: interaction entries must be <= 0");
  }
  if (require_monotone) {
    const Vector lo = b + a.rowwise().sum();
    if ((lo.array() < 0.0).any()) {
      throw InvalidArgument("monotone DR quadratic: b + A1 must be >= 0");
    }
    return QuadraticFunction(QuadraticKind::kDR, std::move(b), std::move(a),
                             0.0);
  }
  const double offset = std::max(0.0, -MinOverVertices(b, a));
  return QuadraticFunction(QuadraticKind::kDR, std::move(b), std::move(a),
                           offset);
}

QuadraticFunction QuadraticFunction::MakePositive(Vector b, Matrix a) {
  RequireShape(b, a);
  if ((a.array() < 0.0).any() || (b.array() < 0.0).any()) {
    throw InvalidArgument("positive quadratic: b and A must be >= 0");
  }
  return QuadraticFunction(QuadraticKind::kPositive, std::move(b),
                           std::move(a), 0.0);
}

QuadraticFunction QuadraticFunction::MakeLinear(Vector b) {
  const auto n = b.size();
  return QuadraticFunction(QuadraticKind::kDR, std::move(b), Matrix::Zero(n, n),
                           0.0);
}

QuadraticFunction QuadraticFunction::MakeGeneral(Vector b, Matrix a,
                                                 double offset) {
  return QuadraticFunction(QuadraticKind::kGeneral, std::move(b), std::move(a),
                           offset);
}

QuadraticFunction QuadraticFunction::FromParts(QuadraticKind kind, Vector b,
                                               Matrix a, double offset) {
  RequireShape(b, a);
  if (kind == QuadraticKind::kDR && (a.array() > 0.0).any()) {
    throw InvalidArgument("DR quadratic: interaction entries must be <= 0");
  }
  if (kind == QuadraticKind::kPositive &&
      ((a.array() < 0.0).any() || (b.array() < 0.0).any())) {
    throw InvalidArgument("positive quadratic: b and A must be >= 0");
  }
  if (!std::isfinite(offset)) throw InvalidArgument("quadratic: offset");
  return QuadraticFunction(kind, std::move(b), std::move(a), offset);
}

double QuadraticFunction::Value(const Vector& x) const {
  return offset_ + b_.dot(x) + 0.5 * x.dot(a_ * x);
}

Vector QuadraticFunction::Gradient(const Vector& x) const {
  return b_ + a_ * x;
}

SumFunction::SumFunction(ContinuousFunctionPtr g, ContinuousFunctionPtr h)
    : g_(std::move(g)), h_(std::move(h)) {
  if (!g_ || !h_) throw InvalidArgument("sum of null functions");
  if (g_->dim() != h_->dim()) {
    throw InvalidArgument("sum of functions with different dimensions");
  }
}

MultilinearExtension::MultilinearExtension(SetFunctionPtr f, bool monotone)
    : f_(std::move(f)), n_(f_ ? f_->n() : 0), monotone_(monotone) {
  if (!f_) throw InvalidArgument("multilinear extension of a null function");
  RequireAtMost(n_, kMultilinearLimit, "multilinear extension");
  const TabulatedSetFunction t(*f_);
  table_ = t.table();
  // |second partials| <= 2 max|f|, zero diagonal
  smoothness_ = 2.0 * t.max_value() * (n_ - 1);
  lipschitz_ = 2.0 * t.max_value() * std::sqrt(static_cast<double>(n_));
}

double MultilinearExtension::Value(const Vector& x) const {
  if (x.size() != n_) throw InvalidArgument("multilinear: dimension mismatch");
  std::vector<double> weight(std::size_t{1} << n_);
  weight[0] = 1.0;
  for (int i = 0; i < n_; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) {
      weight[m | half] = weight[m] * x[i];
      weight[m] *= 1.0 - x[i];
    }
  }
  double total = 0.0;
  for (std::size_t m = 0; m < weight.size(); ++m) {
    total += weight[m] * table_[m];
  }
  return total;
}

Vector MultilinearExtension::Gradient(const Vector& x) const {
  Vector g(n_);
  Vector probe = x;
  for (int u = 0; u < n_; ++u) {
    probe[u] = 1.0;
    const double up = Value(probe);
    probe[u] = 0.0;
    g[u] = up - Value(probe);
    probe[u] = x[u];
  }
  return g;
}

QuadraticFunction RandomQuadraticDR(int n, bool monotone, std::uint64_t seed) {
  GroundSet::Make(n);
  Rng rng(seed);
  Matrix a = Matrix::Zero(n, n);
  const int depth = monotone ? 512 : 1536;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      a(i, j) = a(j, i) = -rng.Dyadic(0, depth);
    }
  }
  Vector b(n);
  for (int i = 0; i < n; ++i) {
    b[i] = monotone ? -a.row(i).sum() + rng.Dyadic(0, 512)
                    : rng.Dyadic(0, 1024);
  }
  return QuadraticFunction::MakeDR(std::move(b), std::move(a), monotone);
}

QuadraticFunction RandomPositiveQuadratic(int n, std::uint64_t seed) {
  GroundSet::Make(n);
  Rng rng(seed);
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      a(i, j) = a(j, i) = rng.Dyadic(0, 768);
    }
  }
  Vector b(n);
  for (int i = 0; i < n; ++i) b[i] = rng.Dyadic(256, 1024);
  return QuadraticFunction::MakePositive(std::move(b), std::move(a));
}

}  // namespace sublab
