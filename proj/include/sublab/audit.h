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

#ifndef SUBLAB_AUDIT_H_
#define SUBLAB_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sublab/serialize.h"

namespace sublab {

struct AuditConfig {
  // problem2-gpt5 | problem2-authors-conjecture | problem4-claimed |
  // problem5-claimed
  std::string bound_id = "problem4-claimed";
  int trials = 100;
  std::uint64_t seed = 1;
  int n = 8;
  // Problem 4: coverage | cut | modular | perturbed | mixed (cycles cut,
  // perturbed, coverage by trial). Problem 5: coverage | perturbed | mixed.
  // Problem 2: coverage.
  std::string family = "mixed";
  double delta = 0.2;
  int p = 2;
  double epsilon = 0.25;
  int k = 3;
  int blocks = 3;
  int max_cap = 2;
  // 0 uses the hardware concurrency.
  int threads = 0;
};

// One row per trial in trial order; every cell is already formatted (doubles
// in shortest round-trip form), so the CSV is byte-stable for a given config.
struct AuditReport {
  std::string bound_id;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // min measured/OPT over the trials (1 when OPT = 0); 1 with no trials.
  double min_ratio = 1.0;
  int violations = 0;
  // {"trial", "seed", "instance", "measured", "opt", "threshold"} per
  // violating trial; "instance" replays through InstanceFromJson.
  std::vector<Json> violating;

  std::string ToCsv() const;
};

// Validates the config (InvalidArgument) and the exhaustive limits
// (CapabilityError) before running anything.
void ValidateAuditConfig(const AuditConfig& config);

// Trial t uses instance seed DeriveSeed(config.seed, t). Trials run on a
// thread pool and are merged by trial index.
AuditReport audit(const AuditConfig& config);

Json ToJson(const AuditReport& report);

// Shortest round-trip decimal form of x.
std::string FormatDouble(double x);

}  // namespace sublab

#endif  // SUBLAB_AUDIT_H_
