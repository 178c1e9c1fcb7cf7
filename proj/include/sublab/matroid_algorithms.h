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

#ifndef SUBLAB_MATROID_ALGORITHMS_H_
#define SUBLAB_MATROID_ALGORITHMS_H_

#include <optional>
#include <vector>

#include "sublab/matroid.h"
#include "sublab/set_function.h"
#include "sublab/subset.h"

namespace sublab {

inline constexpr int kCommonIndependentLimit = 18;

// Descending-weight insertion of feasible elements with nonnegative weight.
// Ties go to the lowest element id.
Subset matroid_greedy(const IndependenceOracle& m,
                      const std::vector<double>& weights);

// Starting from T = {}, repeatedly adds the element of maximum marginal
// f(u | base u T) among those keeping base u T + u independent. Stops when
// no feasible element remains or the best marginal is <= 0. Returns T.
// Throws InvalidArgument when base itself is dependent.
Subset psystem_greedy_marginal(const SetFunction& f,
                               const IndependenceOracle& sys, Subset base);

// Maximum-weight set independent in both m1 and m2, by branch-and-prune
// enumeration (n <= 18). With `size`, only sets of exactly that many
// elements qualify and nullopt means none exists. Among maximum-weight sets
// the larger one wins, then the lexicographically smallest.
std::optional<Subset> max_weight_common_independent(
    const IndependenceOracle& m1, const IndependenceOracle& m2,
    const std::vector<double>& weights, std::optional<int> size = std::nullopt);

// Largest cardinality of a set independent in both (n <= 18).
int common_rank(const IndependenceOracle& m1, const IndependenceOracle& m2);

double TotalWeight(Subset s, const std::vector<double>& weights);

}  // namespace sublab

#endif  // SUBLAB_MATROID_ALGORITHMS_H_
