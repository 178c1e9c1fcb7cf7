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

#include "sublab/polytope.h"

#include <algorithm>
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "sublab/errors.h"
#include "sublab/random.h"

namespace sublab {
namespace {

std::vector<Polytope> Families(int n, Rng& rng) {
  std::vector<int> block_of(n);
  for (int& b : block_of) b = static_cast<int>(rng.Below(3));
  std::vector<double> costs(n);
  for (double& c : costs) c = rng.Uniform(0.2, 1.5);
  return {Polytope::Box(n), Polytope::Cardinality(n, 2),
          Polytope::Partition(block_of, {1, 2, 1}),
          Polytope::Knapsack(costs, 1.3)};
}

TEST(PolytopeTest, Contains) {
  const auto card = Polytope::Cardinality(3, 1);
  Vector x(3);
  x << 0.5, 0.5, 0.0;
  EXPECT_TRUE(card.Contains(x));
  x << 0.5, 0.6, 0.0;
  EXPECT_FALSE(card.Contains(x));
  x << -0.1, 0.0, 0.0;
  EXPECT_FALSE(Polytope::Box(3).Contains(x));
  EXPECT_THROW(Polytope::Knapsack({1.0, 0.0}, 1.0), InvalidArgument);
  EXPECT_THROW(PolytopeFamilyFromString("simplex"), CapabilityError);
}

TEST(PolytopeTest, Diameters) {
  EXPECT_DOUBLE_EQ(Polytope::Box(4).diameter(), 2.0);
  EXPECT_DOUBLE_EQ(Polytope::Cardinality(9, 4).diameter(), 2.0);
  EXPECT_DOUBLE_EQ(Polytope::Cardinality(3, 7).diameter(), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(Polytope::Partition({0, 0, 0, 1}, {2, 5}).diameter(),
                   std::sqrt(3.0));
}

TEST(LmoTest, OptimalAgainstSampledMembers) {
  Rng rng(77);
  for (int n : {2, 4, 6}) {
    for (const Polytope& p : Families(n, rng)) {
      for (int trial = 0; trial < 5; ++trial) {
        Vector c(n);
        for (int i = 0; i < n; ++i) c[i] = rng.Uniform(-1.0, 2.0);
        const Vector v = lmo(p, c);
        ASSERT_TRUE(p.Contains(v)) << ToString(p.family());
        const double best = c.dot(v);
        for (int s = 0; s < 10000 / 5; ++s) {
          const Vector x = p.SampleMember(rng);
          ASSERT_TRUE(p.Contains(x));
          ASSERT_LE(x.norm(), p.diameter() + 1e-9);
          ASSERT_LE(c.dot(x), best + 1e-9) << ToString(p.family());
        }
      }
    }
  }
}

TEST(LmoTest, ClosedFormsForBoxAndCardinality) {
  Vector c(5);
  c << 0.5, -1.0, 3.0, 2.0, 0.0;
  Vector expect(5);
  expect << 1.0, 0.0, 1.0, 1.0, 0.0;
  EXPECT_EQ(lmo(Polytope::Box(5), c), expect);
  expect << 0.0, 0.0, 1.0, 1.0, 0.0;
  EXPECT_EQ(lmo(Polytope::Cardinality(5, 2), c), expect);
  // ties go to the lowest index
  EXPECT_EQ(lmo(Polytope::Cardinality(3, 1), Vector::Ones(3)),
            (Vector(3) << 1.0, 0.0, 0.0).finished());
  EXPECT_EQ(lmo(Polytope::Box(3), -Vector::Ones(3)), Vector::Zero(3));
}

TEST(LmoTest, KnapsackIsFractionalGreedy) {
  // densities 2, 1, 3; budget 2: take item 2 (cost 1), then half of item 0
  Vector c(3);
  c << 4.0, 1.0, 3.0;
  const auto p = Polytope::Knapsack({2.0, 1.0, 1.0}, 2.0);
  const Vector v = lmo(p, c);
  EXPECT_DOUBLE_EQ(v[2], 1.0);
  EXPECT_DOUBLE_EQ(v[0], 0.5);
  EXPECT_DOUBLE_EQ(v[1], 0.0);
}

TEST(PolytopeTest, DownClosed) {
  Rng rng(4);
  for (const Polytope& p : Families(5, rng)) {
    for (int t = 0; t < 500; ++t) {
      Vector x = p.SampleMember(rng);
      for (int i = 0; i < 5; ++i) x[i] *= rng.Uniform01();
      EXPECT_TRUE(p.Contains(x));
    }
  }
}

}  // namespace
}  // namespace sublab
