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

#ifndef SUBLAB_ALGORITHMS_H_
#define SUBLAB_ALGORITHMS_H_

#include <cstdint>
#include <optional>

#include "sublab/continuous.h"
#include "sublab/matroid.h"
#include "sublab/polytope.h"
#include "sublab/random.h"
#include "sublab/set_function.h"
#include "sublab/trace.h"

namespace sublab {

// Measured Greedy Frank-Wolfe on F = G + H over a down-closed polytope:
//   s_i = lmo(P, (1 - y_i) (.) grad F(y_i)),  y_{i+1} = y_i + eps (1 - y_i) (.) s_i
// for T = ceil(1/eps) iterations with effective step 1/T. G must be monotone.
RunTrace mgfw(const ContinuousFunction& g, const ContinuousFunction& h,
              const Polytope& p, double eps);

// Iteration count used by mgfw: ceil(1/eps), robust to 1/eps rounding.
int MgfwIterations(double eps);

// max(1, ceil(ln(1/eps) / ln((p+1)/p))).
int bicriteria_rounds(int p, double eps);
// max(1, ceil(log_{p+1}(1/eps))), the smaller round count conjectured for
// p-systems.
int conjectured_rounds(int p, double eps);

// Repeated greedy passes on the residual f(. | S_{i-1}) over the p-system;
// S is the union of the passes. The number of passes is
// bicriteria_rounds(p, eps) unless `passes` overrides it. f must be monotone.
RunTrace multipass_greedy(const SetFunction& f, const PSystem& sys,
                          double eps, std::optional<int> passes = std::nullopt);

// Frank-Wolfe with constant steps 1/K: v_k = lmo(P, grad F(x_k)),
// x_{k+1} = x_k + step_k v_k. The last step is clipped so the steps sum to
// exactly 1. `declared_gamma` is only recorded.
RunTrace fw_weak_dr(const ContinuousFunction& f, const Polytope& p, int K,
                    double declared_gamma);

// k rounds; each round takes the k candidates of largest marginal among the
// remaining real elements and 2k zero-marginal dummies (ties: real first,
// then lowest id) and adds one of them uniformly at random. Dummies have ids
// n .. n+2k-1 in the trace; the solution contains real elements only.
RunTrace randomized_greedy_dummies(const SetFunction& f, int k,
                                   Chooser& chooser);
RunTrace randomized_greedy_dummies(const SetFunction& f, int k,
                                   std::uint64_t seed);

// While some element extends S in both matroids: weights w(u) = f(u | S),
// M = maximum-weight common independent set of M1/S and M2/S (no size
// target), add a uniformly random member of M. info["common_rank"] holds
// the initial common rank r and info["fixed_rounds_would_fail"] is 1 when
// fewer than r rounds were possible.
RunTrace random_greedy_matroid_intersection(const SetFunction& f,
                                            const IndependenceOracle& m1,
                                            const IndependenceOracle& m2,
                                            Chooser& chooser);
RunTrace random_greedy_matroid_intersection(const SetFunction& f,
                                            const IndependenceOracle& m1,
                                            const IndependenceOracle& m2,
                                            std::uint64_t seed);

}  // namespace sublab

#endif  // SUBLAB_ALGORITHMS_H_
