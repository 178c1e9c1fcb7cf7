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

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "sublab/errors.h"
#include "sublab/generators.h"
#include "sublab/ratios.h"

namespace sublab {
namespace {

TEST(ModularTest, SumsWeights) {
  const ModularFunction f({1.0, 2.5, 0.5});
  EXPECT_EQ(f(Subset()), 0.0);
  EXPECT_EQ(f(Subset::Of({0, 2})), 1.5);
  EXPECT_EQ(marginal(f, 1, Subset::Of({0})), 2.5);
  EXPECT_THROW(ModularFunction({1.0, -1.0}), InvalidArgument);
}

TEST(MarginalTest, RejectsMemberAndOutOfRange) {
  const ModularFunction f({1.0, 2.0});
  EXPECT_THROW(marginal(f, 0, Subset::Of({0})), InvalidArgument);
  EXPECT_THROW(marginal(f, 2, Subset()), InvalidArgument);
  EXPECT_THROW(marginal(f, -1, Subset()), InvalidArgument);
}

TEST(CoverageTest, CountsUnionOnce) {
  // items: 0 (w 1), 1 (w 2), 2 (w 4)
  const CoverageFunction f({0b011, 0b110, 0b100}, {1.0, 2.0, 4.0});
  EXPECT_EQ(f(Subset::Of({0})), 3.0);
  EXPECT_EQ(f(Subset::Of({0, 1})), 7.0);
  EXPECT_EQ(f(Subset::Of({1, 2})), 6.0);
  EXPECT_EQ(marginal(f, 2, Subset::Of({1})), 0.0);
}

TEST(CutTest, TriangleValues) {
  const CutFunction f(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 4.0}});
  EXPECT_EQ(f(Subset()), 0.0);
  EXPECT_EQ(f(Subset::Full(3)), 0.0);
  EXPECT_EQ(f(Subset::Of({0})), 5.0);
  EXPECT_EQ(f(Subset::Of({1})), 3.0);
  EXPECT_THROW(CutFunction(2, {{0, 2, 1.0}}), InvalidArgument);
}

TEST(PerturbedTest, ZeroDeltaIsBase) {
  auto base = RandomCoverage({8, 0, 0.25}, 3);
  const PerturbedFunction f(base, 0.0, 9, false);
  for (Subset::Mask m = 0; m < 256; ++m) {
    EXPECT_EQ(f(Subset(m)), (*base)(Subset(m)));
  }
}

TEST(PerturbedTest, ClosureIsMonotoneAndDominatesRaw) {
  auto base = RandomCoverage({8, 0, 0.25}, 4);
  const PerturbedFunction raw(base, 0.5, 9, false);
  const PerturbedFunction closed(base, 0.5, 9, true);
  EXPECT_TRUE(IsMonotone(closed));
  for (Subset::Mask m = 0; m < 256; ++m) {
    EXPECT_GE(closed(Subset(m)), raw(Subset(m)));
    EXPECT_GE(raw(Subset(m)), 0.0);
  }
}

TEST(PerturbedTest, NoiseIsBoundedByDelta) {
  auto base = RandomCoverage({10, 0, 0.25}, 5);
  const PerturbedFunction f(base, 0.2, 1, false);
  for (Subset::Mask m = 1; m < 1024; ++m) {
    EXPECT_LE(std::abs(f(Subset(m)) - (*base)(Subset(m))), 0.2);
  }
}

TEST(ResidualTest, ShiftsByBase) {
  const ModularFunction f({1.0, 2.0, 4.0});
  const ResidualFunction r(f, Subset::Of({0}));
  EXPECT_EQ(r(Subset()), 0.0);
  EXPECT_EQ(r(Subset::Of({0, 2})), 4.0);
}

TEST(TabulatedTest, MatchesSource) {
  auto f = RandomCut({9, 0.5}, 2);
  const TabulatedSetFunction t(*f);
  double best = 0.0;
  for (Subset::Mask m = 0; m < 512; ++m) {
    EXPECT_EQ(t(Subset(m)), (*f)(Subset(m)));
    best = std::max(best, (*f)(Subset(m)));
  }
  EXPECT_EQ(t.max_value(), best);
  const CustomSetFunction big(21, [](Subset s) { return s.size(); });
  EXPECT_THROW(TabulatedSetFunction{big}, CapabilityError);
}

TEST(GeneratorsTest, SeedDeterminismAndShape) {
  auto a = RandomCoverage({10, 0, 0.25}, 17);
  auto b = RandomCoverage({10, 0, 0.25}, 17);
  EXPECT_EQ(a->covers(), b->covers());
  EXPECT_EQ(a->universe_weights(), b->universe_weights());
  for (auto c : a->covers()) EXPECT_NE(c, 0u);
  EXPECT_EQ(static_cast<int>(a->universe_weights().size()), 20);
  auto cut = RandomCut({6, 0.0}, 3);
  EXPECT_GE(cut->edges().size(), 1u);
  auto m = RandomModular(5, 1);
  for (double w : m->weights()) EXPECT_GE(w, 0.0);
}

}  // namespace
}  // namespace sublab
