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

#include "sublab/generators.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "sublab/errors.h"
#include "sublab/random.h"

namespace sublab {

std::shared_ptr<const ModularFunction> RandomModular(int n,
                                                     std::uint64_t seed) {
  GroundSet::Make(n);
  Rng rng(seed);
  std::vector<double> w(n);
  for (double& x : w) x = rng.Dyadic(1, 1024);
  return std::make_shared<const ModularFunction>(std::move(w));
}

std::shared_ptr<const CoverageFunction> RandomCoverage(const CoverageParams& p,
                                                       std::uint64_t seed) {
  GroundSet::Make(p.n);
  const int universe = p.universe > 0 ? p.universe : std::min(64, 2 * p.n);
  if (universe > 64) throw InvalidArgument("coverage universe exceeds 64");
  if (!(p.density > 0.0 && p.density <= 1.0)) {
    throw InvalidArgument("coverage density must be in (0, 1]");
  }
  Rng rng(seed);
  std::vector<double> weights(universe);
  for (double& w : weights) w = rng.Dyadic(1, 1024);
  std::vector<std::uint64_t> covers(p.n, 0);
  for (auto& c : covers) {
    for (int item = 0; item < universe; ++item) {
      if (rng.Bernoulli(p.density)) c |= std::uint64_t{1} << item;
    }
    if (c == 0) c = std::uint64_t{1} << rng.UniformInt(0, universe - 1);
  }
  return std::make_shared<const CoverageFunction>(std::move(covers),
                                                  std::move(weights));
}

std::shared_ptr<const CutFunction> RandomCut(const CutParams& p,
                                             std::uint64_t seed) {
  GroundSet::Make(p.n);
  if (p.n < 2) throw InvalidArgument("cut instances need at least 2 vertices");
  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < p.n; ++u) {
    for (int v = u + 1; v < p.n; ++v) {
      if (rng.Bernoulli(p.edge_probability)) {
        edges.push_back({u, v, rng.Dyadic(1, 1024)});
      }
    }
  }
  if (edges.empty()) edges.push_back({0, 1, rng.Dyadic(1, 1024)});
  return std::make_shared<const CutFunction>(p.n, std::move(edges));
}

std::shared_ptr<const PerturbedFunction> RandomPerturbed(
    const PerturbedParams& p, std::uint64_t seed) {
  auto base = RandomCoverage(p.base, DeriveSeed(seed, 0));
  return std::make_shared<const PerturbedFunction>(
      std::move(base), p.delta, DeriveSeed(seed, 1), p.monotone_closure);
}

}  // namespace sublab
