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

#include "sublab/audit.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sublab/algorithms.h"
#include "sublab/errors.h"
#include "sublab/experiment.h"
#include "sublab/parallel.h"
#include "sublab/random.h"

namespace sublab {
namespace {

struct TrialResult {
  std::vector<std::string> row;
  double ratio = 1.0;
  bool violated = false;
  Json violating;
};

double Ratio(double measured, double opt) {
  return opt > 0.0 ? measured / opt : 1.0;
}

std::string FamilyFor(const AuditConfig& c, int trial, int problem) {
  if (c.family != "mixed") return c.family;
  if (problem == 5) return trial % 2 == 0 ? "coverage" : "perturbed";
  static const char* kCycle[] = {"cut", "perturbed", "coverage"};
  return kCycle[trial % 3];
}

InstanceSpec SpecFor(const AuditConfig& c, int problem, int trial) {
  InstanceSpec s;
  s.problem = problem;
  s.family = FamilyFor(c, trial, problem);
  s.n = c.n;
  s.delta = c.delta;
  // problem 5 needs a monotone objective; problem 4 audits the raw noise
  s.monotone = problem != 4;
  s.p = problem == 2 ? c.p : 2;
  s.k = c.k;
  s.blocks = c.blocks;
  s.max_cap = c.max_cap;
  s.seed = DeriveSeed(c.seed, static_cast<std::uint64_t>(trial));
  return s;
}

Json Violation(int trial, const InstanceSpec& spec,
               const ProblemInstance& instance, const GuaranteeReport& r) {
  return {{"trial", trial},
          {"seed", spec.seed},
          {"instance", ToJson(instance)},
          {"measured", r.measured},
          {"opt", r.opt},
          {"threshold", r.threshold}};
}

TrialResult RunProblem2(const AuditConfig& c, int trial, bool conjecture) {
  const InstanceSpec spec = SpecFor(c, 2, trial);
  const ProblemInstance instance = GenerateInstance(spec);
  const PSystem sys = PSystem::Intersection(instance.matroids);
  const OptimumCertificate cert =
      brute_force_opt_set(*instance.objective, IndependentIn(sys));
  const int gp = bicriteria_rounds(c.p, c.epsilon);
  const BoundParams q = {{"eps", c.epsilon}};
  TrialResult out;

  if (!conjecture) {
    const RunTrace t = multipass_greedy(*instance.objective, sys, c.epsilon);
    const GuaranteeReport r = check_bound({t.value, true, 0.0}, cert,
                                          GetBound("problem2-gpt5"), q);
    out.ratio = Ratio(t.value, cert.value);
    out.violated = r.verdict == Verdict::kViolated;
    out.row = {std::to_string(trial), instance.id,     std::to_string(c.p),
               FormatDouble(c.epsilon), std::to_string(gp),
               FormatDouble(t.value), FormatDouble(cert.value),
               FormatDouble(out.ratio), FormatDouble(r.threshold),
               out.violated ? "1" : "0"};
    if (out.violated) out.violating = Violation(trial, spec, instance, r);
    return out;
  }

  // Passes are deterministic, so the first l passes of the g_p run are the
  // l-pass run.
  const int conj = conjectured_rounds(c.p, c.epsilon);
  const RunTrace t = multipass_greedy(*instance.objective, sys, c.epsilon,
                                      std::max(gp, conj));
  const double target = (1.0 - c.epsilon) * cert.value;
  const double tol = 1e-9 * std::max(1.0, std::abs(target));
  Subset prefix;
  double value_conj = instance.objective->Value(Subset());
  double value_gp = value_conj;
  int needed = value_conj >= target - tol ? 0 : -1;
  for (int l = 1; l <= static_cast<int>(t.passes.size()); ++l) {
    prefix = prefix | t.passes[l - 1];
    const double v = instance.objective->Value(prefix);
    if (l == conj) value_conj = v;
    if (l == gp) value_gp = v;
    if (needed < 0 && v >= target - tol) needed = l;
  }
  const GuaranteeReport r =
      check_bound({value_conj, true, 0.0}, cert,
                  GetBound("problem2-authors-conjecture"), q);
  out.ratio = Ratio(value_conj, cert.value);
  out.violated = r.verdict == Verdict::kViolated;
  out.row = {std::to_string(trial),
             instance.id,
             std::to_string(c.p),
             FormatDouble(c.epsilon),
             std::to_string(conj),
             std::to_string(gp),
             FormatDouble(value_conj),
             FormatDouble(value_gp),
             FormatDouble(cert.value),
             FormatDouble(out.ratio),
             FormatDouble(Ratio(value_gp, cert.value)),
             std::to_string(needed),
             out.violated ? "0" : "1"};
  if (out.violated) out.violating = Violation(trial, spec, instance, r);
  return out;
}

TrialResult RunClaimed(const AuditConfig& c, int trial, int problem) {
  const InstanceSpec spec = SpecFor(c, problem, trial);
  const ProblemInstance instance = GenerateInstance(spec);
  const RatioMeasurement ratios = *instance.ratios;
  const OptimumCertificate cert = CertifyOptimum(instance, 1.0);
  const ExactExpectation e = ExactInstanceExpectation(instance);
  const BoundFormula& bound = GetBound(DefaultBoundId(problem));
  const BoundParams q = {{"gamma", ratios.gamma}, {"m", ratios.m}};
  const GuaranteeReport r = check_bound({e.value, true, 0.0}, cert, bound, q);
  TrialResult out;
  out.ratio = Ratio(e.value, cert.value);
  out.violated = r.verdict == Verdict::kViolated;
  const double factor = cert.value > 0.0 ? r.threshold / cert.value : 0.0;
  out.row = {std::to_string(trial),
             instance.id,
             spec.family,
             std::to_string(spec.n),
             FormatDouble(ratios.gamma),
             FormatDouble(ratios.m),
             FormatDouble(e.value),
             FormatDouble(cert.value),
             FormatDouble(factor),
             FormatDouble(r.threshold),
             FormatDouble(out.ratio),
             std::to_string(e.leaves)};
  if (problem == 4) {
    out.row.insert(out.row.begin() + 4, std::to_string(spec.k));
  } else {
    const ExactExpectation fail = expected_value_exact([&](Chooser& ch) {
      return random_greedy_matroid_intersection(*instance.objective,
                                                instance.matroids[0],
                                                instance.matroids[1], ch)
          .info.at("fixed_rounds_would_fail");
    });
    out.row.push_back(FormatDouble(fail.value));
  }
  out.row.push_back(out.violated ? "1" : "0");
  if (out.violated) out.violating = Violation(trial, spec, instance, r);
  return out;
}

std::vector<std::string> HeaderFor(const std::string& bound_id) {
  if (bound_id == "problem2-gpt5") {
    return {"trial", "instance_id", "p",     "epsilon",   "rounds",
            "value", "opt",         "ratio", "threshold", "violated"};
  }
  if (bound_id == "problem2-authors-conjecture") {
    return {"trial",           "instance_id",    "p",
            "epsilon",         "conj_rounds",    "gp_rounds",
            "value_conj",      "value_gp",       "opt",
            "ratio_conj",      "ratio_gp",       "min_rounds_needed",
            "conj_reaches_target"};
  }
  if (bound_id == "problem4-claimed") {
    return {"trial",  "instance_id", "family", "n",         "k",
            "gamma",  "m",           "expectation", "opt", "bound_factor",
            "threshold", "ratio",    "leaves", "violated"};
  }
  return {"trial",     "instance_id", "family", "n",      "gamma",
          "m",         "expectation", "opt",    "bound_factor",
          "threshold", "ratio",       "leaves", "p_fixed_rounds_fail",
          "violated"};
}

std::string CsvCell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string FormatDouble(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, result.ptr);
}

void ValidateAuditConfig(const AuditConfig& c) {
  if (c.trials < 0) throw InvalidArgument("trials must be >= 0");
  if (c.threads < 0) throw InvalidArgument("threads must be >= 0");
  GetBound(c.bound_id);
  const bool p2 = c.bound_id == "problem2-gpt5" ||
                  c.bound_id == "problem2-authors-conjecture";
  if (p2) {
    if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) {
      throw InvalidArgument("epsilon must be in (0, 1)");
    }
    if (c.family != "coverage" && c.family != "mixed") {
      throw InvalidArgument("problem 2 audits use coverage instances");
    }
  } else if (c.bound_id == "problem5-claimed") {
    if (c.family != "mixed" && c.family != "coverage" && c.family != "perturbed") {
      throw InvalidArgument("problem 5 audits use coverage or perturbed");
    }
  } else if (c.bound_id != "problem4-claimed") {
    throw InvalidArgument("no audit for bound " + c.bound_id);
  }
  // set ratios are needed per instance
  RequireAtMost(c.n, kSubmodularityRatioLimit, "audit instances");
  const int problem = p2 ? 2 : (c.bound_id == "problem4-claimed" ? 4 : 5);
  for (int t = 0; t < std::min(c.trials, 3); ++t) {
    ValidateSpec(SpecFor(c, problem, t));
  }
}

AuditReport audit(const AuditConfig& config) {
  ValidateAuditConfig(config);
  AuditReport report;
  report.bound_id = config.bound_id;
  report.header = HeaderFor(config.bound_id);
  if (config.trials == 0) return report;

  std::vector<TrialResult> results(config.trials);
  ParallelFor(config.trials, config.threads, [&](int t) {
    if (config.bound_id == "problem2-gpt5") {
      results[t] = RunProblem2(config, t, false);
    } else if (config.bound_id == "problem2-authors-conjecture") {
      results[t] = RunProblem2(config, t, true);
    } else {
      results[t] =
          RunClaimed(config, t, config.bound_id == "problem4-claimed" ? 4 : 5);
    }
  });

  for (auto& r : results) {
    report.min_ratio = std::min(report.min_ratio, r.ratio);
    if (r.violated) {
      ++report.violations;
      report.violating.push_back(std::move(r.violating));
    }
    report.rows.push_back(std::move(r.row));
  }
  return report;
}

std::string AuditReport::ToCsv() const {
  std::ostringstream out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << CsvCell(cells[i]);
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out.str();
}

Json ToJson(const AuditReport& report) {
  return {{"kind", "audit"},
          {"bound_id", report.bound_id},
          {"provenance", std::string(ToString(GetBound(report.bound_id).provenance))},
          {"trials", report.rows.size()},
          {"min_ratio", report.min_ratio},
          {"violations", report.violations},
          {"header", report.header},
          {"rows", report.rows},
          {"violating", report.violating}};
}

}  // namespace sublab
