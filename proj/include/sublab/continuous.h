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

#ifndef SUBLAB_CONTINUOUS_H_
#define SUBLAB_CONTINUOUS_H_

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sublab/set_function.h"

namespace sublab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Differentiable F: [0,1]^n -> R with certified constants:
//   smoothness(): L with ||grad F(x) - grad F(y)|| <= L ||x - y||
//   lipschitz():  bound on ||grad F(x)|| over the cube
class ContinuousFunction {
 public:
  virtual ~ContinuousFunction() = default;

  virtual int dim() const = 0;
  virtual double Value(const Vector& x) const = 0;
  virtual Vector Gradient(const Vector& x) const = 0;
  virtual double smoothness() const = 0;
  virtual double lipschitz() const = 0;
  virtual bool monotone() const = 0;
  virtual std::string_view kind() const = 0;
};

using ContinuousFunctionPtr = std::shared_ptr<const ContinuousFunction>;

enum class QuadraticKind {
  kDR,        // all entries of A <= 0
  kPositive,  // all entries of A >= 0: monotone, gamma-weakly DR, gamma < 1
  kGeneral,
};

std::string_view ToString(QuadraticKind kind);
QuadraticKind QuadraticKindFromString(std::string_view name);

// F(x) = offset + b.x + x'Ax / 2 with A symmetric.
class QuadraticFunction final : public ContinuousFunction {
 public:
  // DR-submodular quadratic. offset is raised to the smallest value that
  // keeps F >= 0 on the cube (the minimum is attained at a vertex since F is
  // concave along each coordinate). With require_monotone, b + A^- 1 >= 0 is
  // enforced and offset stays 0.
  static QuadraticFunction MakeDR(Vector b, Matrix a, bool require_monotone);
  // Monotone quadratic with nonnegative interactions. Not DR-submodular.
  static QuadraticFunction MakePositive(Vector b, Matrix a);
  static QuadraticFunction MakeLinear(Vector b);
  // No structural validation beyond symmetry and shape.
  static QuadraticFunction MakeGeneral(Vector b, Matrix a, double offset);
  // Rebuilds a stored instance as-is (sign pattern of A checked per kind).
  static QuadraticFunction FromParts(QuadraticKind kind, Vector b, Matrix a,
                                     double offset);

  int dim() const override { return static_cast<int>(b_.size()); }
  double Value(const Vector& x) const override;
  Vector Gradient(const Vector& x) const override;
  double smoothness() const override { return smoothness_; }
  double lipschitz() const override { return lipschitz_; }
  bool monotone() const override { return monotone_; }
  std::string_view kind() const override { return ToString(kind_); }

  QuadraticKind quadratic_kind() const { return kind_; }
  const Vector& linear() const { return b_; }
  const Matrix& interaction() const { return a_; }
  double offset() const { return offset_; }

 private:
  QuadraticFunction(QuadraticKind kind, Vector b, Matrix a, double offset);

  QuadraticKind kind_;
  Vector b_;
  Matrix a_;
  double offset_;
  double smoothness_ = 0.0;
  double lipschitz_ = 0.0;
  bool monotone_ = false;
};

// G + H with L = L_G + L_H.
class SumFunction final : public ContinuousFunction {
 public:
  SumFunction(ContinuousFunctionPtr g, ContinuousFunctionPtr h);

  int dim() const override { return g_->dim(); }
  double Value(const Vector& x) const override {
    return g_->Value(x) + h_->Value(x);
  }
  Vector Gradient(const Vector& x) const override {
    return g_->Gradient(x) + h_->Gradient(x);
  }
  double smoothness() const override {
    return g_->smoothness() + h_->smoothness();
  }
  double lipschitz() const override { return g_->lipschitz() + h_->lipschitz(); }
  bool monotone() const override { return g_->monotone() && h_->monotone(); }
  std::string_view kind() const override { return "sum"; }

  const ContinuousFunction& g() const { return *g_; }
  const ContinuousFunction& h() const { return *h_; }

 private:
  ContinuousFunctionPtr g_;
  ContinuousFunctionPtr h_;
};

inline constexpr int kMultilinearLimit = 15;

// Exact multilinear extension F(x) = E[f(R(x))] by 2^n enumeration.
class MultilinearExtension final : public ContinuousFunction {
 public:
  // monotone is declared by the caller (it is a property of f).
  MultilinearExtension(SetFunctionPtr f, bool monotone);

  int dim() const override { return n_; }
  double Value(const Vector& x) const override;
  // dF/dx_u = F(x with x_u = 1) - F(x with x_u = 0).
  Vector Gradient(const Vector& x) const override;
  double smoothness() const override { return smoothness_; }
  double lipschitz() const override { return lipschitz_; }
  bool monotone() const override { return monotone_; }
  std::string_view kind() const override { return "multilinear"; }

  const SetFunction& base() const { return *f_; }

 private:
  SetFunctionPtr f_;
  int n_;
  std::vector<double> table_;
  double smoothness_;
  double lipschitz_;
  bool monotone_;
};

// Random instance families. Entries are drawn on a 1/1024 grid.
QuadraticFunction RandomQuadraticDR(int n, bool monotone, std::uint64_t seed);
QuadraticFunction RandomPositiveQuadratic(int n, std::uint64_t seed);

}  // namespace sublab

#endif  // SUBLAB_CONTINUOUS_H_
