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

#include "sublab/ratios.h"

#include <algorithm>
#include <cmath>

#include "sublab/errors.h"
#include "sublab/random.h"

namespace sublab {
namespace {

double AbsoluteTolerance(const TabulatedSetFunction& t) {
  return kRelativeTolerance * std::max(1.0, t.max_value());
}

}  // namespace

SubmodularityCheck is_submodular_bruteforce(const SetFunction& f) {
  RequireAtMost(f.n(), kSubmodularCheckLimit, "is_submodular_bruteforce");
  const TabulatedSetFunction t(f);
  const double tol = AbsoluteTolerance(t);
  const auto& v = t.table();
  const Subset::Mask size = Subset::Mask{1} << f.n();
  for (Subset::Mask a = 0; a < size; ++a) {
    for (Subset::Mask b = a + 1; b < size; ++b) {
      const double excess = v[a | b] + v[a & b] - v[a] - v[b];
      if (excess > tol) {
        return {false, Subset(a), Subset(b), excess};
      }
    }
  }
  return {};
}

RatioWitness submodularity_ratio(const SetFunction& f) {
  RequireAtMost(f.n(), kSubmodularityRatioLimit, "submodularity_ratio");
  const TabulatedSetFunction t(f);
  const double tol = AbsoluteTolerance(t);
  const Subset ground = f.ground();
  RatioWitness best;
  double minimum = 1.0;
  std::vector<double> gains(f.n());
  ForEachSubsetOf(ground, [&](Subset a) {
    const double fa = t.Value(a);
    const Subset rest = ground - a;
    rest.for_each([&](int u) { gains[u] = t.Value(a.with(u)) - fa; });
    ForEachSubsetOf(rest, [&](Subset b) {
      if (b.empty()) return;
      const double joint = t.Value(a | b) - fa;
      if (joint <= tol) return;
      double singles = 0.0;
      b.for_each([&](int u) { singles += gains[u]; });
      const double ratio = singles / joint;
      if (ratio < minimum) {
        minimum = ratio;
        best = {ratio, true, a, b};
      }
    });
  });
  best.value = std::clamp(minimum, 0.0, 1.0);
  return best;
}

RatioWitness monotonicity_ratio(const SetFunction& f) {
  RequireAtMost(f.n(), kMonotonicityRatioLimit, "monotonicity_ratio");
  const TabulatedSetFunction t(f);
  RatioWitness best;
  double minimum = 1.0;
  ForEachSubsetOf(f.ground(), [&](Subset upper) {
    const double ft = t.Value(upper);
    ForEachSubsetOf(upper, [&](Subset lower) {
      const double fs = t.Value(lower);
      if (fs <= 0.0) return;
      const double ratio = ft / fs;
      if (ratio < minimum) {
        minimum = ratio;
        best = {ratio, true, lower, upper};
      }
    });
  });
  best.value = std::clamp(minimum, 0.0, 1.0);
  return best;
}

RatioMeasurement MeasureRatios(const SetFunction& f) {
  RatioMeasurement out;
  out.m_witness = monotonicity_ratio(f);
  out.gamma_witness = submodularity_ratio(f);
  out.m = out.m_witness.value;
  out.gamma = out.gamma_witness.value;
  out.non_monotone = out.m < 1.0;
  return out;
}

bool IsMonotone(const SetFunction& f) {
  if (f.n() <= kTabulationLimit) {
    const TabulatedSetFunction t(f);
    const double tol = AbsoluteTolerance(t);
    bool monotone = true;
    ForEachSubsetOf(f.ground(), [&](Subset s) {
      if (!monotone) return;
      (f.ground() - s).for_each([&](int u) {
        if (t.Value(s.with(u)) < t.Value(s) - tol) monotone = false;
      });
    });
    return monotone;
  }
  Rng rng(0x5eed);
  for (int t = 0; t < 20000; ++t) {
    const Subset s(rng.Next() & f.ground().mask());
    const int u = rng.UniformInt(0, f.n() - 1);
    if (s.contains(u)) continue;
    const double fs = f.Value(s);
    if (f.Value(s.with(u)) < fs - kRelativeTolerance * std::max(1.0, std::abs(fs))) {
      return false;
    }
  }
  return true;
}

}  // namespace sublab
