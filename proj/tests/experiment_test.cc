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

#include "sublab/experiment.h"

#include <gtest/gtest.h>

#include "sublab/audit.h"
#include "sublab/continuous_checks.h"
#include "sublab/errors.h"

namespace sublab {
namespace {

std::string Join(const std::vector<std::string>& cells) {
  std::string out;
  for (const auto& c : cells) out += (out.empty() ? "" : ",") + c;
  return out;
}

InstanceSpec Spec(int problem, const std::string& family, int n, std::uint64_t seed) {
  InstanceSpec s;
  s.problem = problem;
  s.family = family;
  s.n = n;
  s.seed = seed;
  return s;
}

TEST(ValidateSpecTest, RejectsBadCombinations) {
  EXPECT_THROW(ValidateSpec(Spec(6, "coverage", 8, 1)), InvalidArgument);
  EXPECT_THROW(ValidateSpec(Spec(1, "coverage", 3, 1)), InvalidArgument);
  EXPECT_THROW(ValidateSpec(Spec(2, "cut", 8, 1)), InvalidArgument);
  EXPECT_THROW(ValidateSpec(Spec(3, "quadratic-dr", 6, 1)), CapabilityError);
  EXPECT_THROW(ValidateSpec(Spec(2, "coverage", 19, 1)), CapabilityError);
  InstanceSpec s = Spec(4, "cut", 6, 1);
  s.k = 7;
  EXPECT_THROW(ValidateSpec(s), InvalidArgument);
  s = Spec(0, "perturbed", 8, 1);
  s.delta = -1.0;
  EXPECT_THROW(ValidateSpec(s), InvalidArgument);
}

TEST(GenerateTest, MeasuresOnGeneration) {
  InstanceSpec s = Spec(0, "perturbed", 8, 3);
  s.delta = 0.2;
  const auto p = GenerateInstance(s);
  ASSERT_TRUE(p.ratios.has_value());
  EXPECT_LT(p.ratios->gamma, 1.0);
  const auto c = GenerateInstance(Spec(0, "coverage", 10, 7));
  EXPECT_EQ(c.ratios->gamma, 1.0);
  EXPECT_EQ(c.ratios->m, 1.0);
  InstanceSpec q = Spec(0, "quadratic-dr", 3, 1);
  const auto dr = GenerateInstance(q);
  EXPECT_TRUE(dr_check(*dr.g, 1000, 1).dr);
  EXPECT_TRUE(dr.g->monotone());
  EXPECT_EQ(GenerateInstance(Spec(3, "quadratic-dr", 3, 2)).continuous_gamma, 1.0);
  EXPECT_LT(*GenerateInstance(Spec(3, "quadratic-positive", 3, 2)).continuous_gamma, 1.0);
}

TEST(RunVerifyTest, ProvedBoundsHoldOnSmallInstances) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    InstanceSpec s1 = Spec(1, "quadratic-dr", 3, seed);
    InstanceSpec s2 = Spec(2, "coverage", 8, seed);
    s2.p = 2;
    InstanceSpec s3 = Spec(3, "quadratic-positive", 3, seed);
    s3.polytope = "partition";
    for (const auto& spec : {s1, s2, s3}) {
      const auto inst = GenerateInstance(spec);
      VerifyParams params;
      params.run.epsilon = spec.problem == 1 ? 0.05 : 0.25;
      const auto trace = RunInstance(inst, params.run, 1);
      const auto reports = VerifyInstance(inst, {trace}, params);
      ASSERT_EQ(reports.size(), 1u);
      EXPECT_EQ(reports[0].verdict, Verdict::kHolds) << inst.id;
      EXPECT_EQ(reports[0].instance_id, inst.id);
    }
  }
}

TEST(RunVerifyTest, ClaimedBoundsUseExactExpectation) {
  for (int problem : {4, 5}) {
    InstanceSpec s = Spec(problem, "coverage", 7, 9);
    const auto inst = GenerateInstance(s);
    const auto reports = VerifyInstance(inst, {}, VerifyParams{});
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_TRUE(reports[0].exact);
    EXPECT_EQ(reports[0].provenance, Provenance::kClaimedFlawed);
    EXPECT_NE(reports[0].verdict, Verdict::kInconclusive);
  }
}

TEST(RunVerifyTest, DependentPassIsViolation) {
  InstanceSpec s = Spec(2, "coverage", 6, 2);
  s.blocks = 1;
  const auto inst = GenerateInstance(s);
  RunTrace t = RunInstance(inst, RunParams{}, 0);
  t.passes.push_back(Subset::Full(6));
  const auto reports = VerifyInstance(inst, {t}, VerifyParams{});
  EXPECT_EQ(reports[0].verdict, Verdict::kViolated);
}

TEST(AuditTest, ZeroTrialsIsEmpty) {
  AuditConfig c;
  c.trials = 0;
  const auto r = audit(c);
  EXPECT_TRUE(r.rows.empty());
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(r.ToCsv(), Join(r.header) + "\n");
}

TEST(AuditTest, DeterministicAcrossThreadCounts) {
  for (const std::string bound : {"problem2-gpt5", "problem2-authors-conjecture",
                                  "problem4-claimed", "problem5-claimed"}) {
    AuditConfig c;
    c.bound_id = bound;
    c.trials = 6;
    c.n = 7;
    c.family = bound.starts_with("problem2") ? "coverage" : "mixed";
    c.threads = 1;
    const auto a = audit(c);
    c.threads = 3;
    const auto b = audit(c);
    EXPECT_EQ(a.ToCsv(), b.ToCsv()) << bound;
    EXPECT_EQ(ToJson(a).dump(), ToJson(b).dump());
    EXPECT_EQ(a.rows.size(), 6u);
    for (const auto& row : a.rows) EXPECT_EQ(row.size(), a.header.size());
  }
}

TEST(AuditTest, ProvedBoundHasNoViolations) {
  AuditConfig c;
  c.bound_id = "problem2-gpt5";
  c.trials = 30;
  c.family = "coverage";
  c.n = 9;
  c.p = 3;
  const auto r = audit(c);
  EXPECT_EQ(r.violations, 0);
  EXPECT_GE(r.min_ratio, 0.75);
}

TEST(AuditTest, Validation) {
  AuditConfig c;
  c.bound_id = "problem1-mgfw";
  EXPECT_THROW(audit(c), InvalidArgument);
  c.bound_id = "problem4-claimed";
  c.n = 13;
  EXPECT_THROW(audit(c), CapabilityError);
}

}  // namespace
}  // namespace sublab
