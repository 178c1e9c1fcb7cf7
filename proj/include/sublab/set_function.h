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

#ifndef SUBLAB_SET_FUNCTION_H_
#define SUBLAB_SET_FUNCTION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sublab/subset.h"

namespace sublab {

enum class SetFamily {
  kModular,
  kCoverage,
  kCut,
  kPerturbed,
  kCustom,
  kResidual,
  kTabulated,
};

std::string_view ToString(SetFamily family);

// Value oracle f: 2^N -> R>=0 over the ground set {0, ..., n-1}.
// Implementations are immutable after construction and safe to share
// between threads.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual int n() const = 0;
  virtual double Value(Subset s) const = 0;
  virtual SetFamily family() const = 0;

  double operator()(Subset s) const { return Value(s); }
  Subset ground() const { return Subset::Full(n()); }
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

// f(S + u) - f(S). Negative values are possible for non-monotone f.
// Throws InvalidArgument when u is in S or outside the ground set.
double marginal(const SetFunction& f, int u, Subset s);

// f(S) = sum of w_u over u in S.
class ModularFunction final : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights);

  int n() const override { return static_cast<int>(weights_.size()); }
  double Value(Subset s) const override;
  SetFamily family() const override { return SetFamily::kModular; }

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// Weighted coverage: element u covers the universe items in covers[u];
// f(S) is the total weight of items covered by S. Universe size <= 64.
class CoverageFunction final : public SetFunction {
 public:
  CoverageFunction(std::vector<std::uint64_t> covers,
                   std::vector<double> universe_weights);

  int n() const override { return static_cast<int>(covers_.size()); }
  double Value(Subset s) const override;
  SetFamily family() const override { return SetFamily::kCoverage; }

  const std::vector<std::uint64_t>& covers() const { return covers_; }
  const std::vector<double>& universe_weights() const {
    return universe_weights_;
  }

 private:
  std::vector<std::uint64_t> covers_;
  std::vector<double> universe_weights_;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Undirected cut: f(S) = total weight of edges with exactly one endpoint in
// S. Submodular, non-monotone, f(empty) = f(N) = 0.
class CutFunction final : public SetFunction {
 public:
  CutFunction(int n, std::vector<WeightedEdge> edges);

  int n() const override { return n_; }
  double Value(Subset s) const override;
  SetFamily family() const override { return SetFamily::kCut; }

  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
};

// Coverage function plus seeded per-subset additive noise:
//   g(S) = max(0, base(S) + delta * xi(S)),  xi(S) uniform in [-1, 1)
// where xi(S) is a hash of (seed, S). With `monotone_closure` the value is
// max over T subset of S of g(T), which restores monotonicity while keeping
// the function (in general) non-submodular. delta = 0 gives base exactly.
class PerturbedFunction final : public SetFunction {
 public:
  // Closure requires n <= 20 (tabulated at construction).
  PerturbedFunction(std::shared_ptr<const CoverageFunction> base, double delta,
                    std::uint64_t seed, bool monotone_closure);

  int n() const override { return base_->n(); }
  double Value(Subset s) const override;
  SetFamily family() const override { return SetFamily::kPerturbed; }

  const CoverageFunction& base() const { return *base_; }
  const std::shared_ptr<const CoverageFunction>& base_ptr() const {
    return base_;
  }
  double delta() const { return delta_; }
  std::uint64_t seed() const { return seed_; }
  bool monotone_closure() const { return monotone_closure_; }

 private:
  double Raw(Subset s) const;

  std::shared_ptr<const CoverageFunction> base_;
  double delta_;
  std::uint64_t seed_;
  bool monotone_closure_;
  std::vector<double> closure_;
};

// Arbitrary callable, for tests and ad hoc experiments. Not serializable.
class CustomSetFunction final : public SetFunction {
 public:
  CustomSetFunction(int n, std::function<double(Subset)> fn);

  int n() const override { return n_; }
  double Value(Subset s) const override { return fn_(s); }
  SetFamily family() const override { return SetFamily::kCustom; }

 private:
  int n_;
  std::function<double(Subset)> fn_;
};

// T -> f(S u T) - f(S). Nonnegative whenever f is monotone.
class ResidualFunction final : public SetFunction {
 public:
  ResidualFunction(const SetFunction& f, Subset s)
      : f_(f), s_(s), base_value_(f.Value(s)) {}

  int n() const override { return f_.n(); }
  double Value(Subset t) const override {
    return f_.Value(s_ | t) - base_value_;
  }
  SetFamily family() const override { return SetFamily::kResidual; }

 private:
  const SetFunction& f_;
  Subset s_;
  double base_value_;
};

// All 2^n values of f, n <= 20. The plain per-instance cache used by the
// exhaustive measurements.
class TabulatedSetFunction final : public SetFunction {
 public:
  explicit TabulatedSetFunction(const SetFunction& f);

  int n() const override { return n_; }
  double Value(Subset s) const override { return table_[s.mask()]; }
  SetFamily family() const override { return SetFamily::kTabulated; }

  const std::vector<double>& table() const { return table_; }
  double max_value() const { return max_value_; }

 private:
  int n_;
  std::vector<double> table_;
  double max_value_ = 0.0;
};

inline constexpr int kTabulationLimit = 20;

}  // namespace sublab

#endif  // SUBLAB_SET_FUNCTION_H_
