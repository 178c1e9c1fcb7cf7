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

#include "sublab/matroid.h"

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "sublab/errors.h"
#include "sublab/matroid_algorithms.h"
#include "sublab/random.h"
#include "sublab/set_function.h"

namespace sublab {
namespace {

class ListOracle final : public IndependenceOracle {
 public:
  ListOracle(int n, std::vector<Subset> sets) : n_(n), sets_(std::move(sets)) {}
  int n() const override { return n_; }
  bool IsIndependent(Subset s) const override {
    return std::find(sets_.begin(), sets_.end(), s) != sets_.end();
  }

 private:
  int n_;
  std::vector<Subset> sets_;
};

// Exhaustive reference for weighted optimization over an oracle pair.
Subset BruteBest(const IndependenceOracle& a, const IndependenceOracle& b,
                 const std::vector<double>& w, double* best_weight) {
  const int n = a.n();
  Subset best;
  double bw = -1.0;
  for (Subset::Mask m = 0; m < (Subset::Mask{1} << n); ++m) {
    const Subset s(m);
    if (!a.IsIndependent(s) || !b.IsIndependent(s)) continue;
    const double v = TotalWeight(s, w);
    if (v > bw + 1e-12) {
      bw = v;
      best = s;
    }
  }
  *best_weight = bw;
  return best;
}

std::vector<double> RandomWeights(int n, Rng& rng, bool allow_negative) {
  std::vector<double> w(n);
  for (double& x : w) x = allow_negative ? rng.Dyadic(-512, 1024) : rng.Dyadic(0, 1024);
  return w;
}

TEST(MatroidTest, UniformAndPartition) {
  const auto u = Matroid::Uniform(5, 2);
  EXPECT_TRUE(u.IsIndependent(Subset::Of({1, 4})));
  EXPECT_FALSE(u.IsIndependent(Subset::Of({0, 1, 4})));
  const auto p = Matroid::Partition({0, 0, 1, 1, 1}, {1, 2});
  EXPECT_TRUE(p.IsIndependent(Subset::Of({0, 2, 3})));
  EXPECT_FALSE(p.IsIndependent(Subset::Of({0, 1})));
  EXPECT_THROW(Matroid::Partition({0, 3}, {1, 1}), InvalidArgument);
  EXPECT_TRUE(Matroid::Free(4).IsIndependent(Subset::Full(4)));
}

TEST(MatroidTest, GraphicForests) {
  // triangle 0-1-2 plus a pendant edge 2-3
  const auto g = Matroid::Graphic(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_TRUE(g.IsIndependent(Subset::Of({0, 1, 3})));
  EXPECT_FALSE(g.IsIndependent(Subset::Of({0, 1, 2})));
  const auto loop = Matroid::Graphic(2, {{0, 0}, {0, 1}, {0, 1}});
  EXPECT_FALSE(loop.IsIndependent(Subset::Of({0})));
  EXPECT_FALSE(loop.IsIndependent(Subset::Of({1, 2})));
}

TEST(MatroidAxiomsTest, ExhaustiveForGeneratedFamilies) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    for (int n : {1, 4, 7, 10}) {
      const auto part = RandomPartitionMatroid(n, 3, 3, seed);
      EXPECT_TRUE(CheckMatroidAxioms(part).ok) << CheckMatroidAxioms(part).failure;
      const auto graph = RandomGraphicMatroid(n, 5, seed);
      EXPECT_TRUE(CheckMatroidAxioms(graph).ok) << CheckMatroidAxioms(graph).failure;
      EXPECT_TRUE(CheckMatroidAxioms(Matroid::Uniform(n, static_cast<int>(seed % 4))).ok);
    }
  }
}

TEST(MatroidAxiomsTest, DetectsExchangeFailure) {
  const ListOracle bad(3, {Subset(), Subset::Of({0}), Subset::Of({1}),
                           Subset::Of({2}), Subset::Of({1, 2})});
  const auto check = CheckMatroidAxioms(bad);
  EXPECT_FALSE(check.ok);
  EXPECT_TRUE(CheckDownClosed(bad).ok);
  const ListOracle not_closed(2, {Subset(), Subset::Of({0, 1})});
  EXPECT_FALSE(CheckDownClosed(not_closed).ok);
  EXPECT_THROW(CheckMatroidAxioms(Matroid::Uniform(11, 2)), CapabilityError);
}

TEST(PSystemTest, IntersectionAndContraction) {
  const auto a = Matroid::Partition({0, 0, 1}, {1, 1});
  const auto b = Matroid::Uniform(3, 1);
  const auto sys = PSystem::Intersection({a, b});
  EXPECT_EQ(sys.p(), 2);
  EXPECT_TRUE(sys.IsIndependent(Subset::Of({2})));
  EXPECT_FALSE(sys.IsIndependent(Subset::Of({0, 2})));
  const ContractedSystem c(a, Subset::Of({0}));
  EXPECT_FALSE(c.IsIndependent(Subset::Of({1})));
  EXPECT_TRUE(c.IsIndependent(Subset::Of({2})));
  EXPECT_FALSE(c.IsIndependent(Subset::Of({0})));
}

TEST(MatroidGreedyTest, OptimalOnMatroids) {
  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const auto m = seed % 2 ? RandomGraphicMatroid(n, 4, seed)
                            : RandomPartitionMatroid(n, 3, 2, seed);
    const auto w = RandomWeights(n, rng, true);
    double best = 0.0;
    BruteBest(m, Matroid::Free(n), w, &best);
    const Subset s = matroid_greedy(m, w);
    EXPECT_TRUE(m.IsIndependent(s));
    EXPECT_DOUBLE_EQ(TotalWeight(s, w), best);
  }
}

TEST(CommonIndependentTest, MatchesBruteForce) {
  Rng rng(21);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    const auto a = RandomPartitionMatroid(n, 3, 2, seed);
    const auto b = seed % 3 ? RandomPartitionMatroid(n, 2, 2, seed + 100)
                            : RandomGraphicMatroid(n, 4, seed);
    const auto w = RandomWeights(n, rng, seed % 2 == 0);
    double best = 0.0;
    BruteBest(a, b, w, &best);
    const auto s = max_weight_common_independent(a, b, w);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(a.IsIndependent(*s) && b.IsIndependent(*s));
    EXPECT_NEAR(TotalWeight(*s, w), best, 1e-12);
  }
}

TEST(CommonIndependentTest, SizeTargetAndTies) {
  const auto a = Matroid::Uniform(4, 2);
  const auto b = Matroid::Free(4);
  const std::vector<double> zero(4, 0.0);
  // all-zero weights: the larger set wins, then the lexicographically smallest
  EXPECT_EQ(*max_weight_common_independent(a, b, zero), Subset::Of({0, 1}));
  const std::vector<double> w = {1.0, 5.0, 2.0, 0.5};
  EXPECT_EQ(*max_weight_common_independent(a, b, w, 1), Subset::Of({1}));
  EXPECT_FALSE(max_weight_common_independent(a, b, w, 3).has_value());
  EXPECT_EQ(common_rank(a, Matroid::Partition({0, 0, 0, 1}, {1, 1})), 2);
}

TEST(PSystemGreedyTest, ModularOnMatroidEqualsGreedy) {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = RandomPartitionMatroid(8, 3, 2, seed);
    const auto w = RandomWeights(8, rng, false);
    const ModularFunction f(w);
    EXPECT_DOUBLE_EQ(TotalWeight(psystem_greedy_marginal(f, m, Subset()), w),
                     TotalWeight(matroid_greedy(m, w), w));
  }
  const auto u = Matroid::Uniform(3, 1);
  const ModularFunction f({1.0, 1.0, 1.0});
  EXPECT_THROW(psystem_greedy_marginal(f, u, Subset::Of({0, 1})), InvalidArgument);
}

}  // namespace
}  // namespace sublab
