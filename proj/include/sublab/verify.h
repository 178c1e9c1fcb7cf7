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

#ifndef SUBLAB_VERIFY_H_
#define SUBLAB_VERIFY_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sublab/continuous.h"
#include "sublab/matroid.h"
#include "sublab/polytope.h"
#include "sublab/random.h"
#include "sublab/set_function.h"

namespace sublab {

enum class OptimumMethod { kExhaustive, kGrid };

// OPT with an error radius: lower() <= true optimum <= upper().
struct OptimumCertificate {
  double value = 0.0;
  double radius = 0.0;
  OptimumMethod method = OptimumMethod::kExhaustive;
  Subset set;
  std::vector<double> point;

  double lower() const { return value; }
  double upper() const { return value + radius; }
};

using SubsetPredicate = std::function<bool(Subset)>;

inline constexpr int kBruteForceLimit = 18;
inline constexpr int kGridDimensionLimit = 5;

// Exact maximum of f over feasible subsets (n <= 18). The empty set must be
// feasible. Ties keep the smallest mask.
OptimumCertificate brute_force_opt_set(const SetFunction& f,
                                       const SubsetPredicate& feasible);

SubsetPredicate IndependentIn(const IndependenceOracle& sys);
SubsetPredicate IndependentInBoth(const IndependenceOracle& m1,
                                  const IndependenceOracle& m2);
SubsetPredicate AtMostK(int k);

// Maximum of F over the grid {0, h, 2h, ...}^n intersected with P, with
// radius lipschitz(F) * min(h sqrt(n), D): rounding any point of P down to
// the grid stays in P (down-closed) and moves it by at most that distance.
OptimumCertificate grid_opt(const ContinuousFunction& f, const Polytope& p,
                            double resolution);

inline constexpr std::uint64_t kMaxExpectationLeaves = 1'000'000;

struct ExactExpectation {
  double value = 0.0;
  std::uint64_t leaves = 0;
};

// A randomized run whose only randomness is the Chooser it receives; returns
// the final objective value.
using RandomizedRun = std::function<double(Chooser&)>;

// Exact expectation by enumerating every branch of every uniform draw.
// Throws CapabilityError beyond max_leaves leaves.
ExactExpectation expected_value_exact(
    const RandomizedRun& run, std::uint64_t max_leaves = kMaxExpectationLeaves);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  // Half-width of the two-sided 99% normal interval.
  double half_width_99() const { return 2.5758293035489004 * standard_error; }
};

// Independent runs seeded with DeriveSeed(seed, t).
MonteCarloEstimate monte_carlo(const RandomizedRun& run, std::uint64_t samples,
                               std::uint64_t seed);

enum class Provenance { kProved, kClaimedFlawed, kAuthorsConjecture };
std::string_view ToString(Provenance provenance);

using BoundParams = std::map<std::string, double>;

struct BoundFormula {
  std::string id;
  std::string expression;
  Provenance provenance = Provenance::kProved;
  std::vector<std::string> parameters;
  std::function<double(const BoundParams&)> formula;

  // Throws InvalidArgument when a parameter is missing.
  double Evaluate(const BoundParams& params) const;
};

// Known ids:
//   problem1-mgfw               (1-1/e) G_o + (1/e) H_o - eps (L_G+L_H) D^2
//   problem2-gpt5               (1-eps) OPT with g_p(eps) passes
//   problem2-authors-conjecture (1-eps) OPT with ceil(log_{p+1} 1/eps) passes
//   problem3-weak-dr            (1-e^-gamma) OPT - L/(2K)
//   problem4-claimed            (m(1-e^-gamma) + (1-m) gamma/e) OPT
//   problem5-claimed            (gamma/(gamma+2))^2 OPT
const BoundFormula& GetBound(std::string_view id);
std::vector<std::string> BoundIds();

struct Measurement {
  double value = 0.0;
  // Exact value (deterministic run or exact expectation) vs sampled mean.
  bool exact = true;
  double half_width = 0.0;
};

enum class Verdict { kHolds, kViolated, kInconclusive };
std::string_view ToString(Verdict verdict);

struct GuaranteeReport {
  std::string instance_id;
  std::string algorithm_id;
  std::string bound_id;
  Provenance provenance = Provenance::kProved;
  double measured = 0.0;
  bool exact = true;
  double half_width = 0.0;
  double opt = 0.0;
  double threshold = 0.0;
  double slack = 0.0;
  Verdict verdict = Verdict::kHolds;
};

// Evaluates the bound (OPT defaults to cert.upper() when not supplied) and
// subtracts cert.radius from it. Exact measurements are "violated" below the
// threshold; sampled ones are "holds" only when the whole 99% interval
// clears it and "inconclusive" otherwise.
GuaranteeReport check_bound(const Measurement& measured,
                            const OptimumCertificate& cert,
                            const BoundFormula& bound, BoundParams params);

}  // namespace sublab

#endif  // SUBLAB_VERIFY_H_
