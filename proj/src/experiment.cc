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

#include <cmath>
#include <string>
#include <utility>

#include "sublab/algorithms.h"
#include "sublab/continuous_checks.h"
#include "sublab/errors.h"
#include "sublab/generators.h"
#include "sublab/random.h"

namespace sublab {
namespace {

bool IsSetFamily(const std::string& f) {
  return f == "coverage" || f == "cut" || f == "modular" || f == "perturbed";
}

bool IsMonotoneSetFamily(const InstanceSpec& s) {
  return s.family == "coverage" || s.family == "modular" ||
         (s.family == "perturbed" && s.monotone);
}

SetFunctionPtr MakeObjective(const InstanceSpec& s, std::uint64_t seed) {
  CoverageParams coverage;
  coverage.n = s.n;
  if (s.family == "coverage") return RandomCoverage(coverage, seed);
  if (s.family == "modular") return RandomModular(s.n, seed);
  if (s.family == "cut") return RandomCut(CutParams{s.n, 0.5}, seed);
  if (s.family == "perturbed") {
    return RandomPerturbed(PerturbedParams{coverage, s.delta, s.monotone}, seed);
  }
  throw InvalidArgument("unknown set-function family: " + s.family);
}

Polytope MakePolytope(const InstanceSpec& s, std::uint64_t seed) {
  switch (PolytopeFamilyFromString(s.polytope)) {
    case PolytopeFamily::kBox:
      return Polytope::Box(s.n);
    case PolytopeFamily::kCardinality:
      return Polytope::Cardinality(s.n, s.k);
    case PolytopeFamily::kPartition: {
      const Matroid m = RandomPartitionMatroid(s.n, s.blocks, s.max_cap, seed);
      return Polytope::Partition(m.block_of(), m.caps());
    }
    case PolytopeFamily::kKnapsack: {
      Rng rng(seed);
      std::vector<double> costs(s.n);
      for (double& c : costs) c = rng.Dyadic(256, 1024);
      // about half of the expected total cost (mean cost 0.625)
      return Polytope::Knapsack(std::move(costs), 0.3125 * s.n);
    }
  }
  throw CapabilityError("unsupported polytope family");
}

std::string MakeId(const InstanceSpec& s) {
  return "p" + std::to_string(s.problem) + "-" + s.family + "-n" +
         std::to_string(s.n) + "-s" + std::to_string(s.seed);
}

// The epsilon a trace was produced with wins over the verify parameter.
double EpsilonOf(const RunTrace& t, double fallback) {
  const auto it = t.info.find("epsilon");
  return it == t.info.end() ? fallback : it->second;
}

RatioMeasurement RatiosOf(const ProblemInstance& instance) {
  if (instance.ratios) return *instance.ratios;
  return MeasureRatios(*instance.objective);
}

}  // namespace

void ValidateSpec(const InstanceSpec& s) {
  if (s.problem < 0 || s.problem > 5) {
    throw InvalidArgument("problem must be in 0..5");
  }
  GroundSet::Make(s.n);
  if (!(s.delta >= 0.0) || !std::isfinite(s.delta)) {
    throw InvalidArgument("delta must be finite and >= 0");
  }
  if (s.blocks < 1 || s.max_cap < 1) {
    throw InvalidArgument("blocks and max_cap must be >= 1");
  }
  const bool continuous =
      s.family == "quadratic-dr" || s.family == "quadratic-positive";
  if (!continuous && !IsSetFamily(s.family)) {
    throw InvalidArgument("unknown family: " + s.family);
  }
  switch (s.problem) {
    case 0:
      if (continuous) RequireAtMost(s.n, 20, "quadratic generation");
      if (s.family == "perturbed" && s.monotone) {
        RequireAtMost(s.n, kTabulationLimit, "monotone closure");
      }
      break;
    case 1:
    case 3:
      if (s.problem == 1 && s.family != "quadratic-dr") {
        throw InvalidArgument("problem 1 uses the quadratic-dr family");
      }
      if (!continuous) {
        throw InvalidArgument("problem 3 uses a continuous family");
      }
      RequireAtMost(s.n, kGridDimensionLimit, "continuous problems");
      PolytopeFamilyFromString(s.polytope);
      if (s.polytope == "cardinality" && (s.k < 1 || s.k > s.n)) {
        throw InvalidArgument("cardinality polytope needs 1 <= k <= n");
      }
      break;
    case 2:
    case 5:
      if (!IsMonotoneSetFamily(s)) {
        throw InvalidArgument("problems 2 and 5 need a monotone family "
                              "(coverage, modular, or perturbed --monotone)");
      }
      if (s.problem == 2 && s.p < 1) throw InvalidArgument("p must be >= 1");
      RequireAtMost(s.n, kBruteForceLimit, "set problems");
      break;
    case 4:
      if (!IsSetFamily(s.family)) {
        throw InvalidArgument("problem 4 uses a set-function family");
      }
      if (s.k < 1 || s.k > s.n) throw InvalidArgument("need 1 <= k <= n");
      RequireAtMost(s.n, kBruteForceLimit, "set problems");
      break;
  }
}

ProblemInstance GenerateInstance(const InstanceSpec& s) {
  ValidateSpec(s);
  ProblemInstance out;
  out.id = MakeId(s);
  out.problem = s.problem;
  const bool continuous =
      s.family == "quadratic-dr" || s.family == "quadratic-positive";
  auto make_g = [&](std::uint64_t seed) {
    return std::make_shared<const QuadraticFunction>(
        s.family == "quadratic-positive"
            ? RandomPositiveQuadratic(s.n, seed)
            : RandomQuadraticDR(s.n, s.problem != 0 || s.monotone, seed));
  };

  switch (s.problem) {
    case 0:
      if (continuous) {
        out.g = make_g(DeriveSeed(s.seed, 1));
      } else {
        out.objective = MakeObjective(s, DeriveSeed(s.seed, 1));
      }
      break;
    case 1:
      out.g = make_g(DeriveSeed(s.seed, 1));
      out.h = std::make_shared<const QuadraticFunction>(
          RandomQuadraticDR(s.n, false, DeriveSeed(s.seed, 2)));
      out.polytope = MakePolytope(s, DeriveSeed(s.seed, 3));
      break;
    case 3:
      out.g = make_g(DeriveSeed(s.seed, 1));
      out.polytope = MakePolytope(s, DeriveSeed(s.seed, 3));
      out.continuous_gamma =
          weak_dr_gamma(*out.g, 4000, DeriveSeed(s.seed, 4)).gamma;
      break;
    case 2:
    case 5: {
      out.objective = MakeObjective(s, DeriveSeed(s.seed, 1));
      const int count = s.problem == 2 ? s.p : 2;
      for (int j = 0; j < count; ++j) {
        out.matroids.push_back(RandomPartitionMatroid(
            s.n, s.blocks, s.max_cap, DeriveSeed(s.seed, 10 + j)));
      }
      break;
    }
    case 4:
      out.objective = MakeObjective(s, DeriveSeed(s.seed, 1));
      out.k = s.k;
      break;
  }
  if (out.objective && out.objective->n() <= kSubmodularityRatioLimit) {
    out.ratios = MeasureRatios(*out.objective);
  }
  return out;
}

RunTrace RunInstance(const ProblemInstance& instance, const RunParams& params,
                     std::uint64_t seed) {
  switch (instance.problem) {
    case 1:
      return mgfw(*instance.g, *instance.h, *instance.polytope, params.epsilon);
    case 2:
      return multipass_greedy(*instance.objective,
                              PSystem::Intersection(instance.matroids),
                              params.epsilon, params.passes);
    case 3:
      return fw_weak_dr(*instance.g, *instance.polytope, params.iterations,
                        instance.continuous_gamma.value_or(1.0));
    case 4:
      return randomized_greedy_dummies(*instance.objective, instance.k, seed);
    case 5:
      return random_greedy_matroid_intersection(
          *instance.objective, instance.matroids.at(0), instance.matroids.at(1),
          seed);
  }
  throw InvalidArgument("instance " + instance.id +
                        " is not tied to a problem (problem 0)");
}

std::string DefaultBoundId(int problem) {
  switch (problem) {
    case 1:
      return "problem1-mgfw";
    case 2:
      return "problem2-gpt5";
    case 3:
      return "problem3-weak-dr";
    case 4:
      return "problem4-claimed";
    case 5:
      return "problem5-claimed";
  }
  throw InvalidArgument("no bound for problem " + std::to_string(problem));
}

double DirectionalSmoothness(const ContinuousFunction& f, const Polytope& p) {
  return f.smoothness() * p.diameter() * p.diameter();
}

OptimumCertificate CertifyOptimum(const ProblemInstance& instance,
                                  double grid_resolution) {
  switch (instance.problem) {
    case 1:
      return grid_opt(SumFunction(instance.g, instance.h), *instance.polytope,
                      grid_resolution);
    case 3:
      return grid_opt(*instance.g, *instance.polytope, grid_resolution);
    case 2: {
      const PSystem sys = PSystem::Intersection(instance.matroids);
      return brute_force_opt_set(*instance.objective, IndependentIn(sys));
    }
    case 4:
      return brute_force_opt_set(*instance.objective, AtMostK(instance.k));
    case 5:
      return brute_force_opt_set(
          *instance.objective,
          IndependentInBoth(instance.matroids.at(0), instance.matroids.at(1)));
  }
  throw InvalidArgument("no optimum for problem " +
                        std::to_string(instance.problem));
}

ExactExpectation ExactInstanceExpectation(const ProblemInstance& instance) {
  if (instance.problem == 4) {
    return expected_value_exact([&](Chooser& c) {
      return randomized_greedy_dummies(*instance.objective, instance.k, c).value;
    });
  }
  if (instance.problem == 5) {
    return expected_value_exact([&](Chooser& c) {
      return random_greedy_matroid_intersection(
                 *instance.objective, instance.matroids.at(0),
                 instance.matroids.at(1), c)
          .value;
    });
  }
  throw InvalidArgument("exact expectation only for problems 4 and 5");
}

std::vector<GuaranteeReport> VerifyInstance(const ProblemInstance& instance,
                                            const std::vector<RunTrace>& traces,
                                            const VerifyParams& params) {
  const BoundFormula& bound = GetBound(
      params.bound_id.empty() ? DefaultBoundId(instance.problem) : params.bound_id);
  const OptimumCertificate cert =
      CertifyOptimum(instance, params.grid_resolution);
  std::vector<GuaranteeReport> out;
  auto emit = [&](GuaranteeReport r, const std::string& algorithm) {
    r.instance_id = instance.id;
    r.algorithm_id = algorithm;
    out.push_back(std::move(r));
  };

  switch (instance.problem) {
    case 1: {
      const Vector o = Eigen::Map<const Vector>(cert.point.data(),
                                                cert.point.size());
      BoundParams q = {{"G_o", instance.g->Value(o)},
                       {"H_o", instance.h->Value(o)},
                       {"L_G", instance.g->smoothness()},
                       {"L_H", instance.h->smoothness()},
                       {"D", instance.polytope->diameter()}};
      for (const auto& t : traces) {
        q["eps"] = EpsilonOf(t, params.run.epsilon);
        emit(check_bound({t.value, true, 0.0}, cert, bound, q), t.algorithm);
      }
      break;
    }
    case 2: {
      const PSystem sys = PSystem::Intersection(instance.matroids);
      for (const auto& t : traces) {
        GuaranteeReport r = check_bound({t.value, true, 0.0}, cert, bound,
                                        {{"eps", EpsilonOf(t, params.run.epsilon)}});
        for (Subset pass : t.passes) {
          if (!sys.IsIndependent(pass)) r.verdict = Verdict::kViolated;
        }
        emit(std::move(r), t.algorithm);
      }
      break;
    }
    case 3: {
      for (const auto& t : traces) {
        const double k = t.info.count("iterations")
                             ? t.info.at("iterations")
                             : params.run.iterations;
        const BoundParams q = {
            {"gamma", instance.continuous_gamma.value_or(1.0)},
            {"L", DirectionalSmoothness(*instance.g, *instance.polytope)},
            {"K", k}};
        emit(check_bound({t.value, true, 0.0}, cert, bound, q), t.algorithm);
      }
      break;
    }
    case 4:
    case 5: {
      const RatioMeasurement ratios = RatiosOf(instance);
      const BoundParams q = {{"gamma", ratios.gamma}, {"m", ratios.m}};
      const std::string algorithm = instance.problem == 4
                                        ? "randomized-greedy-dummies"
                                        : "random-greedy-matroid-intersection";
      Measurement measured;
      try {
        measured = {ExactInstanceExpectation(instance).value, true, 0.0};
      } catch (const CapabilityError&) {
        if (traces.size() < 2) throw;
        double mean = 0.0;
        for (const auto& t : traces) mean += t.value;
        mean /= static_cast<double>(traces.size());
        double var = 0.0;
        for (const auto& t : traces) var += (t.value - mean) * (t.value - mean);
        var /= static_cast<double>(traces.size() - 1);
        const double se = std::sqrt(var / static_cast<double>(traces.size()));
        measured = {mean, false, MonteCarloEstimate{mean, se, traces.size()}.half_width_99()};
      }
      emit(check_bound(measured, cert, bound, q), algorithm);
      break;
    }
    default:
      throw InvalidArgument("instance " + instance.id + " has no problem");
  }
  return out;
}

}  // namespace sublab
