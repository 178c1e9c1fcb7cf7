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

#ifndef SUBLAB_GENERATORS_H_
#define SUBLAB_GENERATORS_H_

#include <cstdint>
#include <memory>

#include "sublab/set_function.h"

namespace sublab {

// Random set-function instances. All weights are multiples of 1/1024 so
// that sums over subsets are exact in double precision.

std::shared_ptr<const ModularFunction> RandomModular(int n, std::uint64_t seed);

struct CoverageParams {
  int n = 10;
  int universe = 0;       // 0 picks 2n, capped at 64
  double density = 0.25;  // probability that an element covers an item
};

// Every element covers at least one item.
std::shared_ptr<const CoverageFunction> RandomCoverage(const CoverageParams& p,
                                                       std::uint64_t seed);

struct CutParams {
  int n = 8;
  double edge_probability = 0.5;
};

// At least one edge is always present.
std::shared_ptr<const CutFunction> RandomCut(const CutParams& p,
                                             std::uint64_t seed);

struct PerturbedParams {
  CoverageParams base;
  double delta = 0.1;
  bool monotone_closure = false;
};

std::shared_ptr<const PerturbedFunction> RandomPerturbed(
    const PerturbedParams& p, std::uint64_t seed);

}  // namespace sublab

#endif  // SUBLAB_GENERATORS_H_
