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

#ifndef SUBLAB_TRACE_H_
#define SUBLAB_TRACE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sublab/subset.h"

namespace sublab {

// One iteration of any algorithm. Discrete algorithms fill the set fields,
// continuous ones the vector fields.
struct TraceStep {
  int index = 0;
  // Element added this round (dummy ids are >= n).
  std::optional<int> chosen;
  // Candidate set M_i (or T_i for multi-pass greedy), with marginals.
  std::vector<int> candidates;
  std::vector<double> marginals;
  // S_i after the step.
  Subset state;
  // y_i / x_i after the step, and the LMO direction s_i / v_k.
  std::vector<double> point;
  std::vector<double> direction;
  double step = 0.0;
  double value = 0.0;
  // 1 - (1 - step)^(i+1) for the measured update; unused otherwise.
  double mask_bound = 0.0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct RunTrace {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::vector<TraceStep> steps;
  Subset solution;
  std::vector<double> point;
  double value = 0.0;
  // Per-pass independent sets of multi-pass greedy.
  std::vector<Subset> passes;
  // Scalar annotations (rounds, common rank, declared gamma, ...).
  std::map<std::string, double> info;

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

}  // namespace sublab

#endif  // SUBLAB_TRACE_H_
