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

#ifndef SUBLAB_EXPERIMENT_H_
#define SUBLAB_EXPERIMENT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sublab/continuous.h"
#include "sublab/matroid.h"
#include "sublab/polytope.h"
#include "sublab/ratios.h"
#include "sublab/set_function.h"
#include "sublab/trace.h"
#include "sublab/verify.h"

namespace sublab {

// Everything one of the five problems needs, in one replayable unit.
//   1: g (monotone DR), h (DR), polytope
//   2: objective, matroids (p of them)
//   3: g (monotone), polytope, continuous_gamma
//   4: objective, k
//   5: objective, matroids (two)
// problem 0 holds a bare objective or bare g.
struct ProblemInstance {
  std::string id;
  int problem = 0;
  SetFunctionPtr objective;
  std::vector<Matroid> matroids;
  int k = 0;
  std::shared_ptr<const QuadraticFunction> g;
  std::shared_ptr<const QuadraticFunction> h;
  std::optional<Polytope> polytope;
  std::optional<RatioMeasurement> ratios;
  std::optional<double> continuous_gamma;
};

struct InstanceSpec {
  int problem = 0;
  // coverage | cut | modular | perturbed | quadratic-dr | quadratic-positive
  std::string family = "coverage";
  int n = 8;
  double delta = 0.1;
  bool monotone = true;
  int p = 1;
  int k = 2;
  std::string polytope = "cardinality";
  int blocks = 3;
  int max_cap = 2;
  std::uint64_t seed = 1;
};

// Validates the spec against the problem's preconditions (InvalidArgument)
// and the exhaustive limits (CapabilityError) before generating anything.
void ValidateSpec(const InstanceSpec& spec);

// Set ratios are measured when n <= 12, the continuous gamma of problem 3
// always.
ProblemInstance GenerateInstance(const InstanceSpec& spec);

struct RunParams {
  double epsilon = 0.25;
  int iterations = 200;
  std::optional<int> passes;
};

// One run of the problem's algorithm; `seed` feeds the randomized ones.
RunTrace RunInstance(const ProblemInstance& instance, const RunParams& params,
                     std::uint64_t seed);

struct VerifyParams {
  RunParams run;
  double grid_resolution = 0.05;
  // Empty picks the problem's default bound.
  std::string bound_id;
};

std::string DefaultBoundId(int problem);

// Problems 1-3: one exact report per trace. Problems 4-5: one report on the
// exact expectation when the randomness tree fits, otherwise one sampled
// report from the trace values. A multi-pass trace whose passes are not
// independent is reported as violated.
std::vector<GuaranteeReport> VerifyInstance(const ProblemInstance& instance,
                                            const std::vector<RunTrace>& traces,
                                            const VerifyParams& params);

// Optimum certificate for the instance (exhaustive or grid).
OptimumCertificate CertifyOptimum(const ProblemInstance& instance,
                                  double grid_resolution);

// Directional smoothness over P used in the Frank-Wolfe error term:
// F(x + t v) >= F(x) + t <v, grad F(x)> - (L ||v||^2 / 2) t^2 with
// ||v|| <= D, so L * D^2.
double DirectionalSmoothness(const ContinuousFunction& f, const Polytope& p);

// Exact expectation of the randomized problem (4 or 5).
ExactExpectation ExactInstanceExpectation(const ProblemInstance& instance);

}  // namespace sublab

#endif  // SUBLAB_EXPERIMENT_H_
