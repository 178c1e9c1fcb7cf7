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

#include "sublab/continuous_checks.h"

#include <algorithm>
#include <cmath>

#include "sublab/random.h"
#include "sublab/subset.h"

namespace sublab {
namespace {

Vector RandomPoint(int n, Rng& rng) {
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.Uniform01();
  return x;
}

// y >= x, uniform in the box [x, 1].
Vector RandomAbove(const Vector& x, Rng& rng) {
  Vector y = x;
  for (int i = 0; i < x.size(); ++i) y[i] += rng.Uniform01() * (1.0 - x[i]);
  return y;
}

double GradientTolerance(const ContinuousFunction& f) {
  return 1e-9 * std::max(1.0, f.lipschitz());
}

}  // namespace

double grad_check(const ContinuousFunction& f, const Vector& x, double h) {
  if (x.size() != f.dim()) throw InvalidArgument("grad_check: dimension");
  if (!(h > 0.0)) throw InvalidArgument("grad_check: step must be positive");
  if ((x.array() < h).any() || (x.array() > 1.0 - h).any()) {
    throw InvalidArgument("grad_check: x +- h e_u must stay in the cube");
  }
  const Vector g = f.Gradient(x);
  double worst = 0.0;
  Vector probe = x;
  for (int u = 0; u < f.dim(); ++u) {
    probe[u] = x[u] + h;
    const double up = f.Value(probe);
    probe[u] = x[u] - h;
    const double down = f.Value(probe);
    probe[u] = x[u];
    const double fd = (up - down) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - g[u]) / std::max(1.0, std::abs(g[u])));
  }
  return worst;
}

DrCheck dr_check(const ContinuousFunction& f, int samples, std::uint64_t seed) {
  Rng rng(seed);
  const double tol = GradientTolerance(f);
  for (int t = 0; t < samples; ++t) {
    const Vector x = RandomPoint(f.dim(), rng);
    const Vector y = RandomAbove(x, rng);
    const Vector gx = f.Gradient(x);
    const Vector gy = f.Gradient(y);
    for (int u = 0; u < f.dim(); ++u) {
      if (gy[u] > gx[u] + tol) return {false, x, y, u};
    }
  }
  return {};
}

GammaEstimate weak_dr_gamma(const ContinuousFunction& f, int samples,
                            std::uint64_t seed) {
  const int n = f.dim();
  const double tol = 1e-12 * std::max(1.0, f.lipschitz());
  GammaEstimate best;
  double minimum = 1.0;
  auto consider = [&](const Vector& x, const Vector& y) {
    const double rise = f.Value(y) - f.Value(x);
    if (rise <= tol) return;
    const double ratio = (y - x).dot(f.Gradient(x)) / rise;
    if (ratio < minimum) {
      minimum = ratio;
      best.x = x;
      best.y = y;
      best.has_witness = true;
    }
  };
  const Vector zero = Vector::Zero(n);
  if (n <= 12) {
    Vector vertex(n);
    for (Subset::Mask m = 1; m < (Subset::Mask{1} << n); ++m) {
      for (int i = 0; i < n; ++i) vertex[i] = (m >> i) & 1u ? 1.0 : 0.0;
      consider(zero, vertex);
    }
  }
  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    // every third pair starts at the origin
    const Vector x = t % 3 == 0 ? zero : RandomPoint(n, rng);
    consider(x, RandomAbove(x, rng));
  }
  best.gamma = std::clamp(minimum, 0.0, 1.0);
  return best;
}

double sampled_smoothness(const ContinuousFunction& f, int samples,
                          std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    const Vector x = RandomPoint(f.dim(), rng);
    const Vector y = RandomPoint(f.dim(), rng);
    const double dist = (x - y).norm();
    if (dist == 0.0) continue;
    worst = std::max(worst, (f.Gradient(x) - f.Gradient(y)).norm() / dist);
  }
  return worst;
}

bool sampled_monotone(const ContinuousFunction& f, int samples,
                      std::uint64_t seed, double tol) {
  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    if ((f.Gradient(RandomPoint(f.dim(), rng)).array() < -tol).any()) {
      return false;
    }
  }
  return (f.Gradient(Vector::Zero(f.dim())).array() >= -tol).all() &&
         (f.Gradient(Vector::Ones(f.dim())).array() >= -tol).all();
}

}  // namespace sublab
