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

#include "sublab/matroid_algorithms.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sublab/errors.h"

namespace sublab {
namespace {

class CommonIndependentSearch {
 public:
  CommonIndependentSearch(const IndependenceOracle& m1,
                          const IndependenceOracle& m2,
                          const std::vector<double>& weights,
                          std::optional<int> size)
      : m1_(m1), m2_(m2), w_(weights), size_(size), n_(m1.n()) {
    suffix_positive_.assign(n_ + 1, 0.0);
    for (int i = n_ - 1; i >= 0; --i) {
      suffix_positive_[i] = suffix_positive_[i + 1] + std::max(0.0, w_[i]);
    }
  }

  std::optional<Subset> Run() {
    Visit(0, Subset(), 0.0);
    return best_;
  }

 private:
  static double Tolerance(double w) { return 1e-12 * (1.0 + std::abs(w)); }

  bool Better(Subset s, double w) const {
    if (!best_) return true;
    if (w > best_weight_ + Tolerance(best_weight_)) return true;
    if (w < best_weight_ - Tolerance(best_weight_)) return false;
    if (s.size() != best_->size()) return s.size() > best_->size();
    return s.elements() < best_->elements();
  }

  void Visit(int i, Subset current, double weight) {
    const int count = current.size();
    if (size_ && (count > *size_ || count + (n_ - i) < *size_)) return;
    if (best_ && weight + suffix_positive_[i] <
                     best_weight_ - Tolerance(best_weight_)) {
      return;
    }
    if (i == n_) {
      if ((!size_ || count == *size_) && Better(current, weight)) {
        best_ = current;
        best_weight_ = weight;
      }
      return;
    }
    const Subset grown = current.with(i);
    if (m1_.IsIndependent(grown) && m2_.IsIndependent(grown)) {
      Visit(i + 1, grown, weight + w_[i]);
    }
    Visit(i + 1, current, weight);
  }

  const IndependenceOracle& m1_;
  const IndependenceOracle& m2_;
  const std::vector<double>& w_;
  std::optional<int> size_;
  int n_;
  std::vector<double> suffix_positive_;
  std::optional<Subset> best_;
  double best_weight_ = 0.0;
};

std::vector<int> ByDescendingWeight(const std::vector<double>& weights) {
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  return order;
}

}  // namespace

double TotalWeight(Subset s, const std::vector<double>& weights) {
  double total = 0.0;
  s.for_each([&](int u) { total += weights[u]; });
  return total;
}

Subset matroid_greedy(const IndependenceOracle& m,
                      const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != m.n()) {
    throw InvalidArgument("matroid_greedy: one weight per element required");
  }
  for (double w : weights) {
    if (!std::isfinite(w)) throw InvalidArgument("matroid_greedy: weights");
  }
  Subset chosen;
  for (int u : ByDescendingWeight(weights)) {
    if (weights[u] < 0.0) break;
    if (m.IsIndependent(chosen.with(u))) chosen = chosen.with(u);
  }
  return chosen;
}

Subset psystem_greedy_marginal(const SetFunction& f,
                               const IndependenceOracle& sys, Subset base) {
  if (f.n() != sys.n()) {
    throw InvalidArgument("psystem_greedy_marginal: ground sets differ");
  }
  if (!sys.IsIndependent(base)) {
    throw InvalidArgument("psystem_greedy_marginal: base " + base.ToString() +
                          " is not independent");
  }
  Subset added;
  while (true) {
    const Subset current = base | added;
    const double value = f.Value(current);
    int best = -1;
    double best_gain = 0.0;
    for (int u = 0; u < f.n(); ++u) {
      if (current.contains(u) || !sys.IsIndependent(current.with(u))) continue;
      const double gain = f.Value(current.with(u)) - value;
      if (best < 0 || gain > best_gain) {
        best = u;
        best_gain = gain;
      }
    }
    if (best < 0 || best_gain <= 0.0) return added;
    added = added.with(best);
  }
}

std::optional<Subset> max_weight_common_independent(
    const IndependenceOracle& m1, const IndependenceOracle& m2,
    const std::vector<double>& weights, std::optional<int> size) {
  if (m1.n() != m2.n() || static_cast<int>(weights.size()) != m1.n()) {
    throw InvalidArgument("max_weight_common_independent: size mismatch");
  }
  RequireAtMost(m1.n(), kCommonIndependentLimit,
                "max_weight_common_independent");
  if (size && *size < 0) return std::nullopt;
  return CommonIndependentSearch(m1, m2, weights, size).Run();
}

int common_rank(const IndependenceOracle& m1, const IndependenceOracle& m2) {
  const std::vector<double> unit(m1.n(), 1.0);
  const auto best = max_weight_common_independent(m1, m2, unit);
  return best ? best->size() : 0;
}

}  // namespace sublab
