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

#include <gtest/gtest.h>

#include "sublab/errors.h"
#include "sublab/generators.h"

namespace sublab {
namespace {

// Direct O(4^n) evaluation of the set-level gamma, no tabulation.
double NaiveGamma(const SetFunction& f) {
  const int n = f.n();
  double best = 1.0;
  for (Subset::Mask a = 0; a < (Subset::Mask{1} << n); ++a) {
    for (Subset::Mask b = 1; b < (Subset::Mask{1} << n); ++b) {
      if (a & b) continue;
      const double joint = f(Subset(a | b)) - f(Subset(a));
      if (joint <= 1e-9) continue;
      double singles = 0.0;
      for (int u = 0; u < n; ++u) {
        if ((b >> u) & 1u) singles += f(Subset(a).with(u)) - f(Subset(a));
      }
      best = std::min(best, singles / joint);
    }
  }
  return std::max(0.0, best);
}

TEST(SubmodularityCheckTest, SquareIsNotSubmodular) {
  const CustomSetFunction f(4, [](Subset s) { return 1.0 * s.size() * s.size(); });
  const auto check = is_submodular_bruteforce(f);
  EXPECT_FALSE(check.submodular);
  EXPECT_EQ(check.a, Subset::Of({0}));
  EXPECT_EQ(check.b, Subset::Of({1}));
  EXPECT_EQ(check.excess, 2.0);
}

TEST(SubmodularityCheckTest, FamiliesAreSubmodular) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_TRUE(is_submodular_bruteforce(*RandomCoverage({9, 0, 0.3}, seed)).submodular);
    EXPECT_TRUE(is_submodular_bruteforce(*RandomCut({9, 0.5}, seed)).submodular);
    EXPECT_TRUE(is_submodular_bruteforce(*RandomModular(9, seed)).submodular);
  }
}

TEST(SubmodularityRatioTest, CoverageAndModularGiveExactlyOne) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = MeasureRatios(*RandomCoverage({10, 0, 0.25}, seed));
    EXPECT_EQ(m.gamma, 1.0);
    EXPECT_EQ(m.m, 1.0);
    EXPECT_FALSE(m.non_monotone);
    EXPECT_EQ(MeasureRatios(*RandomModular(8, seed)).gamma, 1.0);
  }
}

TEST(SubmodularityRatioTest, SquareHasClosedForm) {
  // sum f(u|A) / f(B|A) = (2|A|+1) / (2|A|+|B|), smallest at A = {}, B = N
  for (int n = 2; n <= 6; ++n) {
    const CustomSetFunction f(n, [](Subset s) { return 1.0 * s.size() * s.size(); });
    const auto w = submodularity_ratio(f);
    EXPECT_DOUBLE_EQ(w.value, 1.0 / n);
    EXPECT_EQ(w.first, Subset());
    EXPECT_EQ(w.second, Subset::Full(n));
  }
}

TEST(SubmodularityRatioTest, MatchesNaiveOracleOnPerturbed) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto f = RandomPerturbed({{6, 0, 0.3}, 0.3, true}, seed);
    EXPECT_NEAR(submodularity_ratio(*f).value, NaiveGamma(*f), 1e-12);
  }
}

TEST(SubmodularityRatioTest, PerturbedMonotoneDropsBelowOne) {
  const auto f = RandomPerturbed({{8, 0, 0.25}, 0.2, true}, 3);
  const auto m = MeasureRatios(*f);
  EXPECT_LT(m.gamma, 1.0);
  EXPECT_EQ(m.m, 1.0);
}

TEST(MonotonicityRatioTest, SmallExample) {
  // f({0}) = 2, f({1}) = 1, f({0,1}) = 1
  const CustomSetFunction f(2, [](Subset s) {
    if (s.empty()) return 0.0;
    return s == Subset::Of({0}) ? 2.0 : 1.0;
  });
  const auto w = monotonicity_ratio(f);
  EXPECT_EQ(w.value, 0.5);
  EXPECT_EQ(w.first, Subset::Of({0}));
  EXPECT_EQ(w.second, Subset::Of({0, 1}));
}

TEST(MonotonicityRatioTest, CutIsZeroAndFlagged) {
  const auto m = MeasureRatios(*RandomCut({7, 0.5}, 1));
  EXPECT_EQ(m.m, 0.0);
  EXPECT_TRUE(m.non_monotone);
}

TEST(MonotonicityRatioTest, ZeroFunctionIsOne) {
  const CustomSetFunction f(3, [](Subset) { return 0.0; });
  EXPECT_EQ(monotonicity_ratio(f).value, 1.0);
}

TEST(RatiosTest, CapabilityLimits) {
  const CustomSetFunction f(13, [](Subset s) { return 1.0 * s.size(); });
  EXPECT_THROW(submodularity_ratio(f), CapabilityError);
  const CustomSetFunction g(15, [](Subset s) { return 1.0 * s.size(); });
  EXPECT_THROW(is_submodular_bruteforce(g), CapabilityError);
  EXPECT_THROW(monotonicity_ratio(g), CapabilityError);
}

TEST(IsMonotoneTest, Families) {
  EXPECT_TRUE(IsMonotone(*RandomCoverage({10, 0, 0.25}, 2)));
  EXPECT_FALSE(IsMonotone(*RandomCut({6, 0.5}, 2)));
  // sampled branch
  EXPECT_TRUE(IsMonotone(*RandomCoverage({30, 0, 0.1}, 2)));
}

}  // namespace
}  // namespace sublab
