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

#ifndef SUBLAB_RATIOS_H_
#define SUBLAB_RATIOS_H_

#include "sublab/set_function.h"
#include "sublab/subset.h"

namespace sublab {

inline constexpr int kSubmodularCheckLimit = 14;
inline constexpr int kSubmodularityRatioLimit = 12;
inline constexpr int kMonotonicityRatioLimit = 14;

// Relative tolerance for exact-equality style checks on oracle values.
inline constexpr double kRelativeTolerance = 1e-9;

struct SubmodularityCheck {
  bool submodular = true;
  // A violating pair when !submodular.
  Subset a;
  Subset b;
  // f(A u B) + f(A n B) - f(A) - f(B) at the witness.
  double excess = 0.0;
};

// Exhaustive check of f(A) + f(B) >= f(A u B) + f(A n B) over all pairs.
SubmodularityCheck is_submodular_bruteforce(const SetFunction& f);

// A ratio together with the pair attaining it.
struct RatioWitness {
  double value = 1.0;
  bool has_witness = false;
  Subset first;
  Subset second;
};

// Largest gamma in [0, 1] with sum_{u in B} f(u | A) >= gamma * f(B | A)
// over all pairs with f(B | A) > 0. Witness is (A, B \ A).
RatioWitness submodularity_ratio(const SetFunction& f);

// min f(T) / f(S) over S subset of T with f(S) > 0, clamped to [0, 1];
// 1 for the zero function. Witness is (S, T).
RatioWitness monotonicity_ratio(const SetFunction& f);

struct RatioMeasurement {
  double gamma = 1.0;
  double m = 1.0;
  RatioWitness gamma_witness;
  RatioWitness m_witness;
  // gamma was measured on a function with m < 1; the set-level ratio is only
  // standard for monotone functions.
  bool non_monotone = false;
};

RatioMeasurement MeasureRatios(const SetFunction& f);

// f(S + u) >= f(S) - tol for every S and u: exhaustive for n <= 20, over
// 20000 sampled (S, u) pairs otherwise.
bool IsMonotone(const SetFunction& f);

}  // namespace sublab

#endif  // SUBLAB_RATIOS_H_
