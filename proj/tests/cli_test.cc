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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "sublab/continuous_checks.h"
#include "sublab/experiment.h"
#include "sublab/serialize.h"

namespace sublab {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("sublab_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  // Runs the binary with --out pointing at the test directory.
  int Run(const std::string& args, std::string* out = nullptr) {
    const fs::path log = dir_ / "stdout.txt";
    const std::string cmd = std::string(SUBLAB_BIN) + " --out " + dir_.string() +
                            " " + args + " > " + log.string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    if (out) *out = Slurp(log);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenCoverageReloadsIdentically) {
  ASSERT_EQ(Run("gen --problem 0 --family coverage --n 10 --seed 7"), 0);
  const auto loaded =
      InstanceFromJson(ReadJsonFile((dir_ / "p0-coverage-n10-s7.json").string()));
  InstanceSpec spec;
  spec.family = "coverage";
  spec.n = 10;
  spec.seed = 7;
  const auto fresh = GenerateInstance(spec);
  for (Subset::Mask m = 0; m < 1024; ++m) {
    ASSERT_EQ((*loaded.objective)(Subset(m)), (*fresh.objective)(Subset(m)));
  }
}

TEST_F(CliTest, GenPerturbedCarriesGammaBelowOne) {
  std::string out;
  ASSERT_EQ(Run("gen --family perturbed --n 8 --delta 0.2 --seed 3", &out), 0);
  const auto j = ReadJsonFile((dir_ / "p0-perturbed-n8-s3.json").string());
  EXPECT_LT(j.at("ratios").at("gamma").get<double>(), 1.0);
  EXPECT_NE(out.find("instance_id\tproblem\tfamily\tn\tgamma\tm\tpath"), std::string::npos);
}

TEST_F(CliTest, GenQuadraticDrPassesChecks) {
  ASSERT_EQ(Run("gen --family quadratic-dr --n 3 --monotone true --seed 1"), 0);
  const auto inst =
      InstanceFromJson(ReadJsonFile((dir_ / "p0-quadratic-dr-n3-s1.json").string()));
  EXPECT_TRUE(dr_check(*inst.g, 1000, 1).dr);
  EXPECT_TRUE(sampled_monotone(*inst.g, 1000, 1));
}

TEST_F(CliTest, RunProblem2LogsTwoPasses) {
  ASSERT_EQ(Run("gen --problem 2 --p 1 --n 8 --seed 4"), 0);
  const std::string inst = (dir_ / "p2-coverage-n8-s4.json").string();
  ASSERT_EQ(Run("run --instance " + inst + " --epsilon 0.25"), 0);
  const auto traces = ReadJsonFile((dir_ / "p2-coverage-n8-s4.traces.json").string());
  ASSERT_EQ(traces.size(), 1u);
  EXPECT_EQ(TraceFromJson(traces[0]).passes.size(), 2u);
}

TEST_F(CliTest, RunProblem4IsByteDeterministic) {
  ASSERT_EQ(Run("gen --problem 4 --family cut --n 8 --k 3 --seed 2"), 0);
  const std::string inst = (dir_ / "p4-cut-n8-s2.json").string();
  std::string first, second;
  ASSERT_EQ(Run("run --instance " + inst + " --trials 1000 --seed 1", &first), 0);
  ASSERT_EQ(Run("run --instance " + inst + " --trials 1000 --seed 1 --threads 2", &second), 0);
  EXPECT_EQ(first, second);
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 1001);
}

TEST_F(CliTest, VerifyExitCodes) {
  ASSERT_EQ(Run("gen --problem 5 --n 6 --seed 2"), 0);
  std::string out;
  EXPECT_EQ(Run("verify --instance " + (dir_ / "p5-coverage-n6-s2.json").string(), &out), 0);
  EXPECT_NE(out.find("problem5-claimed"), std::string::npos);

  // a tampered trace below (1 - eps) OPT on a proved bound exits 2
  ASSERT_EQ(Run("gen --problem 2 --n 8 --seed 3"), 0);
  const std::string inst = (dir_ / "p2-coverage-n8-s3.json").string();
  ASSERT_EQ(Run("run --instance " + inst), 0);
  const std::string traces = (dir_ / "p2-coverage-n8-s3.traces.json").string();
  EXPECT_EQ(Run("verify --instance " + inst + " --traces " + traces), 0);
  Json j = ReadJsonFile(traces);
  j[0]["value"] = 0.0;
  WriteJsonFile(traces, j);
  EXPECT_EQ(Run("verify --instance " + inst + " --traces " + traces, &out), 2);
  EXPECT_NE(out.find("violated"), std::string::npos);
}

TEST_F(CliTest, UsageAndCapabilityExitCodes) {
  EXPECT_EQ(Run("gen --problem 9"), 1);
  EXPECT_EQ(Run("gen --bogus-flag 1"), 1);
  EXPECT_EQ(Run(""), 1);
  EXPECT_EQ(Run("gen --problem 2 --family cut"), 1);
  EXPECT_EQ(Run("gen --problem 2 --n 30"), 3);
  EXPECT_EQ(Run("run --instance /nonexistent.json"), 1);
  EXPECT_EQ(Run("--help"), 0);
}

TEST_F(CliTest, AuditWithZeroTrialsIsEmpty) {
  std::string out;
  EXPECT_EQ(Run("audit --bound problem4-claimed --trials 0", &out), 0);
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 1);
  EXPECT_TRUE(fs::exists(dir_ / "audit-problem4-claimed.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "audit-problem4-claimed.json"));
}

TEST_F(CliTest, ConfigFileAndFlagOverride) {
  const fs::path config = dir_ / "gen.toml";
  std::ofstream(config) << "[gen]\nproblem = 4\nfamily = \"cut\"\nn = 6\nk = 2\nseed = 5\n";
  ASSERT_EQ(Run("--config " + config.string() + " gen"), 0);
  EXPECT_TRUE(fs::exists(dir_ / "p4-cut-n6-s5.json"));
  ASSERT_EQ(Run("--config " + config.string() + " gen --seed 6"), 0);
  EXPECT_TRUE(fs::exists(dir_ / "p4-cut-n6-s6.json"));
}

TEST_F(CliTest, EnvironmentSetsDefaultOutputDirectory) {
  const fs::path env_dir = dir_ / "from_env";
  const std::string cmd = "SUBLAB_OUT_DIR=" + env_dir.string() + " " +
                          std::string(SUBLAB_BIN) +
                          " gen --n 5 --seed 1 > /dev/null 2>&1";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(env_dir / "p0-coverage-n5-s1.json"));
}

}  // namespace
}  // namespace sublab
