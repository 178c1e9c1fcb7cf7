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

#include "sublab/set_function.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "sublab/errors.h"
#include "sublab/random.h"

namespace sublab {

std::string_view ToString(SetFamily family) {
  switch (family) {
    case SetFamily::kModular:
      return "modular";
    case SetFamily::kCoverage:
      return "coverage";
    case SetFamily::kCut:
      return "cut";
    case SetFamily::kPerturbed:
      return "perturbed";
    case SetFamily::kCustom:
      return "custom";
    case SetFamily::kResidual:
      return "residual";
    case SetFamily::kTabulated:
      return "tabulated";
  }
  return "unknown";
}

double marginal(const SetFunction& f, int u, Subset s) {
  if (u < 0 || u >= f.n()) {
    throw InvalidArgument("marginal: element " + std::to_string(u) +
                          " outside the ground set");
  }
  if (s.contains(u)) {
    throw InvalidArgument("marginal: element " + std::to_string(u) +
                          " already in " + s.ToString());
  }
  return f.Value(s.with(u)) - f.Value(s);
}

ModularFunction::ModularFunction(std::vector<double> weights)
    : weights_(std::move(weights)) {
  GroundSet::Make(static_cast<int>(weights_.size()));
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("modular weights must be finite and nonnegative");
    }
  }
}

double ModularFunction::Value(Subset s) const {
  double total = 0.0;
  s.for_each([&](int u) { total += weights_[u]; });
  return total;
}

CoverageFunction::CoverageFunction(std::vector<std::uint64_t> covers,
                                   std::vector<double> universe_weights)
    : covers_(std::move(covers)),
      universe_weights_(std::move(universe_weights)) {
  GroundSet::Make(static_cast<int>(covers_.size()));
  if (universe_weights_.size() > 64) {
    throw InvalidArgument("coverage universe is limited to 64 items");
  }
  for (double w : universe_weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("universe weights must be finite and nonnegative");
    }
  }
  const Subset universe = Subset::Full(static_cast<int>(universe_weights_.size()));
  for (std::uint64_t c : covers_) {
    if (!Subset(c).is_subset_of(universe)) {
      throw InvalidArgument("cover references an item outside the universe");
    }
  }
}

double CoverageFunction::Value(Subset s) const {
  std::uint64_t covered = 0;
  s.for_each([&](int u) { covered |= covers_[u]; });
  double total = 0.0;
  Subset(covered).for_each([&](int item) { total += universe_weights_[item]; });
  return total;
}

CutFunction::CutFunction(int n, std::vector<WeightedEdge> edges)
    : n_(GroundSet::Make(n).n), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v) {
      throw InvalidArgument("cut edge endpoints must be distinct vertices");
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw InvalidArgument("cut edge weights must be finite and nonnegative");
    }
  }
}

double CutFunction::Value(Subset s) const {
  double total = 0.0;
  for (const auto& e : edges_) {
    if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
  }
  return total;
}

PerturbedFunction::PerturbedFunction(
    std::shared_ptr<const CoverageFunction> base, double delta,
    std::uint64_t seed, bool monotone_closure)
    : base_(std::move(base)),
      delta_(delta),
      seed_(seed),
      monotone_closure_(monotone_closure) {
  if (!base_) throw InvalidArgument("perturbed instance needs a base");
  if (!(delta_ >= 0.0) || !std::isfinite(delta_)) {
    throw InvalidArgument("perturbation amplitude must be finite and >= 0");
  }
  if (monotone_closure_) {
    RequireAtMost(n(), kTabulationLimit, "monotone closure");
    const std::size_t size = std::size_t{1} << n();
    closure_.resize(size);
    for (std::size_t m = 0; m < size; ++m) {
      const Subset s(m);
      double best = Raw(s);
      s.for_each([&](int u) { best = std::max(best, closure_[s.without(u).mask()]); });
      closure_[m] = best;
    }
  }
}

double PerturbedFunction::Raw(Subset s) const {
  const double xi =
      2.0 * (static_cast<double>(Mix64(seed_ ^ Mix64(s.mask())) >> 11) *
             0x1.0p-53) -
      1.0;
  return std::max(0.0, base_->Value(s) + delta_ * xi);
}

double PerturbedFunction::Value(Subset s) const {
  return monotone_closure_ ? closure_[s.mask()] : Raw(s);
}

CustomSetFunction::CustomSetFunction(int n, std::function<double(Subset)> fn)
    : n_(GroundSet::Make(n).n), fn_(std::move(fn)) {
  if (!fn_) throw InvalidArgument("custom set function needs a callable");
}

TabulatedSetFunction::TabulatedSetFunction(const SetFunction& f) : n_(f.n()) {
  RequireAtMost(n_, kTabulationLimit, "tabulation");
  const std::size_t size = std::size_t{1} << n_;
  table_.resize(size);
  for (std::size_t m = 0; m < size; ++m) {
    table_[m] = f.Value(Subset(m));
    max_value_ = std::max(max_value_, std::abs(table_[m]));
  }
}

}  // namespace sublab
