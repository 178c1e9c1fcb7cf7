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

#include "sublab/continuous.h"

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "sublab/continuous_checks.h"
#include "sublab/errors.h"
#include "sublab/generators.h"
#include "sublab/random.h"

namespace sublab {
namespace {

Vector Interior(int n, double h, Rng& rng) {
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.Uniform(h, 1.0 - h);
  return x;
}

Vector Indicator(int n, Subset s) {
  Vector x = Vector::Zero(n);
  s.for_each([&](int u) { x[u] = 1.0; });
  return x;
}

TEST(QuadraticTest, ValueAndGradient) {
  Matrix a(2, 2);
  a << -1.0, -0.5, -0.5, -2.0;
  Vector b(2);
  b << 3.0, 4.0;
  const auto f = QuadraticFunction::MakeDR(b, a, true);
  Vector x(2);
  x << 1.0, 1.0;
  // 3 + 4 + (-1 - 1 - 2) / 2
  EXPECT_DOUBLE_EQ(f.Value(x), 5.0);
  EXPECT_DOUBLE_EQ(f.Gradient(x)[0], 1.5);
  EXPECT_DOUBLE_EQ(f.Gradient(x)[1], 1.5);
  EXPECT_DOUBLE_EQ(f.smoothness(), 2.5);
  EXPECT_TRUE(f.monotone());
}

TEST(QuadraticTest, Validation) {
  Matrix asym(2, 2);
  asym << 0.0, -1.0, 0.0, 0.0;
  EXPECT_THROW(QuadraticFunction::MakeDR(Vector::Ones(2), asym, false),
               InvalidArgument);
  Matrix pos = Matrix::Constant(2, 2, 0.5);
  EXPECT_THROW(QuadraticFunction::MakeDR(Vector::Ones(2), pos, false),
               InvalidArgument);
  Matrix deep = Matrix::Constant(2, 2, -2.0);
  EXPECT_THROW(QuadraticFunction::MakeDR(Vector::Ones(2), deep, true),
               InvalidArgument);
  EXPECT_THROW(QuadraticFunction::MakePositive(Vector::Ones(2), -pos),
               InvalidArgument);
  EXPECT_EQ(QuadraticKindFromString("quadratic-dr"), QuadraticKind::kDR);
  EXPECT_THROW(QuadraticKindFromString("cubic"), InvalidArgument);
}

TEST(QuadraticTest, NonMonotoneDrIsNonnegative) {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = RandomQuadraticDR(4, false, seed);
    for (int t = 0; t < 200; ++t) {
      EXPECT_GE(f.Value(Interior(4, 0.0, rng)), -1e-12);
    }
    for (Subset::Mask m = 0; m < 16; ++m) {
      EXPECT_GE(f.Value(Indicator(4, Subset(m))), -1e-12);
    }
  }
}

TEST(QuadraticTest, CertifiedConstantsDominateSamples) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (const auto& f : {RandomQuadraticDR(4, true, seed),
                          RandomQuadraticDR(4, false, seed),
                          RandomPositiveQuadratic(4, seed)}) {
      EXPECT_LE(sampled_smoothness(f, 500, seed), f.smoothness() + 1e-12);
      for (int t = 0; t < 200; ++t) {
        EXPECT_LE(f.Gradient(Interior(4, 0.0, rng)).norm(), f.lipschitz() + 1e-12);
      }
    }
  }
}

TEST(GradCheckTest, AllFamiliesWithinTolerance) {
  Rng rng(9);
  const double h = 1e-4;
  const auto dr = std::make_shared<const QuadraticFunction>(RandomQuadraticDR(5, true, 1));
  const auto dr2 = std::make_shared<const QuadraticFunction>(RandomQuadraticDR(5, false, 2));
  const auto pos = std::make_shared<const QuadraticFunction>(RandomPositiveQuadratic(5, 3));
  const SumFunction sum(dr, dr2);
  const MultilinearExtension ml(RandomCoverage({6, 0, 0.3}, 4), true);
  const MultilinearExtension ml_cut(RandomCut({6, 0.5}, 4), false);
  const ContinuousFunction* families[] = {dr.get(), dr2.get(), pos.get(), &sum,
                                          &ml, &ml_cut};
  for (const ContinuousFunction* f : families) {
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      worst = std::max(worst, grad_check(*f, Interior(f->dim(), h, rng), h));
    }
    EXPECT_LE(worst, 1e-5) << f->kind();
  }
}

TEST(GradCheckTest, RejectsPointsNearBoundary) {
  const auto f = RandomQuadraticDR(3, true, 1);
  EXPECT_THROW(grad_check(f, Vector::Zero(3), 1e-4), InvalidArgument);
}

TEST(MultilinearTest, AgreesWithSetFunctionOnVertices) {
  for (int n : {1, 5, 12}) {
    const auto f = RandomCoverage({n, 0, 0.25}, static_cast<std::uint64_t>(n));
    const MultilinearExtension ml(f, true);
    for (Subset::Mask m = 0; m < (Subset::Mask{1} << n); ++m) {
      ASSERT_EQ(ml.Value(Indicator(n, Subset(m))), (*f)(Subset(m)));
    }
  }
}

TEST(MultilinearTest, ValueIsExpectationOfRounding) {
  // n = 2 by hand: F(x) = sum_S prod x^S (1-x)^(N\S) f(S)
  const auto f = std::make_shared<const CutFunction>(
      2, std::vector<WeightedEdge>{{0, 1, 1.0}});
  const MultilinearExtension ml(f, false);
  Vector x(2);
  x << 0.25, 0.5;
  EXPECT_DOUBLE_EQ(ml.Value(x), 0.25 * 0.5 + 0.75 * 0.5);
  const CustomSetFunction big(16, [](Subset s) { return 1.0 * s.size(); });
  EXPECT_THROW(MultilinearExtension(std::make_shared<CustomSetFunction>(big), true),
               CapabilityError);
}

TEST(DrCheckTest, SeparatesFamilies) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_TRUE(dr_check(RandomQuadraticDR(4, true, seed), 500, seed).dr);
    EXPECT_TRUE(dr_check(RandomQuadraticDR(4, false, seed), 500, seed).dr);
    const auto bad = dr_check(RandomPositiveQuadratic(4, seed), 500, seed);
    EXPECT_FALSE(bad.dr);
    EXPECT_TRUE((bad.x.array() <= bad.y.array()).all());
  }
}

TEST(WeakDrGammaTest, DrIsOneAndPositiveIsBelowVertexRatio) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(weak_dr_gamma(RandomQuadraticDR(4, true, seed), 2000, seed).gamma, 1.0);
    const auto f = RandomPositiveQuadratic(4, seed);
    const auto g = weak_dr_gamma(f, 2000, seed);
    const Vector one = Vector::Ones(4);
    const Vector zero = Vector::Zero(4);
    const double at_corner = f.Gradient(zero).dot(one) / (f.Value(one) - f.Value(zero));
    EXPECT_LE(g.gamma, at_corner + 1e-12);
    EXPECT_GT(g.gamma, 0.0);
    EXPECT_LT(g.gamma, 1.0);
  }
}

TEST(MonotoneCheckTest, Families) {
  EXPECT_TRUE(sampled_monotone(RandomQuadraticDR(4, true, 2), 1000, 1));
  EXPECT_TRUE(sampled_monotone(RandomPositiveQuadratic(4, 2), 1000, 1));
  Matrix a = Matrix::Constant(2, 2, -1.0);
  EXPECT_FALSE(sampled_monotone(
      QuadraticFunction::MakeDR(Vector::Constant(2, 0.5), a, false), 1000, 1));
}

TEST(MaskUpdateTest, BoundHoldsOnRandomSequences) {
  Rng rng(1234);
  for (int seq = 0; seq < 10000; ++seq) {
    const int n = 1 + static_cast<int>(rng.Below(6));
    const double eps = rng.Uniform(0.02, 1.0);
    const int steps = 1 + static_cast<int>(rng.Below(40));
    Vector y = Vector::Zero(n);
    for (int i = 1; i <= steps; ++i) {
      Vector s(n);
      for (int j = 0; j < n; ++j) {
        s[j] = rng.Bernoulli(0.5) ? 1.0 : rng.Uniform01();
      }
      y = mgfw_mask_update(y, s, eps);
      const double bound = 1.0 - std::pow(1.0 - eps, i);
      ASSERT_TRUE(InUnitCube(y));
      ASSERT_LE(y.maxCoeff(), bound + 1e-12) << "seq " << seq << " step " << i;
    }
  }
}

TEST(MaskUpdateTest, Validation) {
  const Vector y = Vector::Zero(2);
  EXPECT_THROW(mgfw_mask_update(y, Vector::Ones(3), 0.5), InvalidArgument);
  EXPECT_THROW(mgfw_mask_update(y, Vector::Constant(2, 2.0), 0.5), InvalidArgument);
  EXPECT_THROW(mgfw_mask_update(y, Vector::Ones(2), 0.0), InvalidArgument);
  EXPECT_EQ(mgfw_mask_update(y, Vector::Ones(2), 1.0), Vector::Ones(2));
}

}  // namespace
}  // namespace sublab
