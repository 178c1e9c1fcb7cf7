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

#include "sublab/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sublab/errors.h"

namespace sublab {
namespace {

// Odometer over the choice tree. Prefix choices are replayed; new draws
// start at branch 0 and their branching factor is recorded.
class ScriptedChooser final : public Chooser {
 public:
  std::size_t Pick(std::size_t count) override {
    if (count == 0) throw InvalidArgument("Pick from an empty candidate set");
    if (position_ < choices_.size()) {
      if (counts_[position_] != count) {
        throw std::logic_error("randomized run is not replayable: branching "
                               "factor changed under a fixed choice prefix");
      }
      return choices_[position_++];
    }
    choices_.push_back(0);
    counts_.push_back(count);
    ++position_;
    return 0;
  }

  void Rewind() {
    choices_.resize(position_);
    counts_.resize(position_);
    position_ = 0;
  }

  double Probability() const {
    double p = 1.0;
    for (std::size_t c : counts_) p /= static_cast<double>(c);
    return p;
  }

  // Moves to the next leaf; false when the tree is exhausted.
  bool Advance() {
    while (!choices_.empty() && choices_.back() + 1 == counts_.back()) {
      choices_.pop_back();
      counts_.pop_back();
    }
    if (choices_.empty()) return false;
    ++choices_.back();
    return true;
  }

 private:
  std::vector<std::size_t> choices_;
  std::vector<std::size_t> counts_;
  std::size_t position_ = 0;
};

const std::vector<BoundFormula>& Registry() {
  static const std::vector<BoundFormula> bounds = [] {
    const double e = std::exp(1.0);
    std::vector<BoundFormula> out;
    out.push_back({"problem1-mgfw",
                   "(1-1/e)*G_o + (1/e)*H_o - eps*(L_G+L_H)*D^2",
                   Provenance::kProved,
                   {"G_o", "H_o", "eps", "L_G", "L_H", "D"},
                   [e](const BoundParams& q) {
                     return (1.0 - 1.0 / e) * q.at("G_o") + q.at("H_o") / e -
                            q.at("eps") * (q.at("L_G") + q.at("L_H")) *
                                q.at("D") * q.at("D");
                   }});
    out.push_back({"problem2-gpt5", "(1-eps)*OPT", Provenance::kProved,
                   {"eps", "OPT"},
                   [](const BoundParams& q) {
                     return (1.0 - q.at("eps")) * q.at("OPT");
                   }});
    out.push_back({"problem2-authors-conjecture", "(1-eps)*OPT",
                   Provenance::kAuthorsConjecture,
                   {"eps", "OPT"},
                   [](const BoundParams& q) {
                     return (1.0 - q.at("eps")) * q.at("OPT");
                   }});
    out.push_back({"problem3-weak-dr", "(1-exp(-gamma))*OPT - L/(2K)",
                   Provenance::kProved,
                   {"gamma", "OPT", "L", "K"},
                   [](const BoundParams& q) {
                     return (1.0 - std::exp(-q.at("gamma"))) * q.at("OPT") -
                            q.at("L") / (2.0 * q.at("K"));
                   }});
    out.push_back({"problem4-claimed",
                   "(m*(1-exp(-gamma)) + (1-m)*gamma/e)*OPT",
                   Provenance::kClaimedFlawed,
                   {"m", "gamma", "OPT"},
                   [e](const BoundParams& q) {
                     const double m = q.at("m");
                     const double g = q.at("gamma");
                     return (m * (1.0 - std::exp(-g)) + (1.0 - m) * g / e) *
                            q.at("OPT");
                   }});
    out.push_back({"problem5-claimed", "(gamma/(gamma+2))^2*OPT",
                   Provenance::kClaimedFlawed,
                   {"gamma", "OPT"},
                   [](const BoundParams& q) {
                     const double r = q.at("gamma") / (q.at("gamma") + 2.0);
                     return r * r * q.at("OPT");
                   }});
    return out;
  }();
  return bounds;
}

}  // namespace

OptimumCertificate brute_force_opt_set(const SetFunction& f,
                                       const SubsetPredicate& feasible) {
  RequireAtMost(f.n(), kBruteForceLimit, "brute_force_opt_set");
  OptimumCertificate cert;
  cert.method = OptimumMethod::kExhaustive;
  bool found = false;
  const Subset::Mask size = Subset::Mask{1} << f.n();
  for (Subset::Mask m = 0; m < size; ++m) {
    const Subset s(m);
    if (!feasible(s)) continue;
    const double v = f.Value(s);
    if (!found || v > cert.value) {
      cert.value = v;
      cert.set = s;
      found = true;
    }
  }
  if (!found) throw InvalidArgument("brute_force_opt_set: nothing feasible");
  return cert;
}

SubsetPredicate IndependentIn(const IndependenceOracle& sys) {
  return [&sys](Subset s) { return sys.IsIndependent(s); };
}

SubsetPredicate IndependentInBoth(const IndependenceOracle& m1,
                                  const IndependenceOracle& m2) {
  return [&m1, &m2](Subset s) {
    return m1.IsIndependent(s) && m2.IsIndependent(s);
  };
}

SubsetPredicate AtMostK(int k) {
  return [k](Subset s) { return s.size() <= k; };
}

OptimumCertificate grid_opt(const ContinuousFunction& f, const Polytope& p,
                            double resolution) {
  const int n = f.dim();
  if (p.dim() != n) throw InvalidArgument("grid_opt: dimension mismatch");
  RequireAtMost(n, kGridDimensionLimit, "grid_opt");
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw InvalidArgument("grid_opt: resolution must be positive");
  }
  const int top = resolution > 1.0
                      ? 0
                      : static_cast<int>(std::floor(1.0 / resolution + 1e-9));
  std::vector<int> level(n, 0);
  Vector x = Vector::Zero(n);
  OptimumCertificate cert;
  cert.method = OptimumMethod::kGrid;
  cert.value = -std::numeric_limits<double>::infinity();
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = std::min(1.0, level[i] * resolution);
    if (p.Contains(x, 1e-12)) {
      const double v = f.Value(x);
      if (v > cert.value) {
        cert.value = v;
        cert.point.assign(x.data(), x.data() + n);
      }
    }
    int i = 0;
    while (i < n && level[i] == top) level[i++] = 0;
    if (i == n) break;
    ++level[i];
  }
  const double cell = resolution * std::sqrt(static_cast<double>(n));
  cert.radius = f.lipschitz() * std::min(cell, p.diameter());
  return cert;
}

ExactExpectation expected_value_exact(const RandomizedRun& run,
                                      std::uint64_t max_leaves) {
  ScriptedChooser chooser;
  ExactExpectation out;
  do {
    if (++out.leaves > max_leaves) {
      throw CapabilityError("expected_value_exact: randomness tree exceeds " +
                            std::to_string(max_leaves) + " leaves");
    }
    const double value = run(chooser);
    chooser.Rewind();
    out.value += chooser.Probability() * value;
  } while (chooser.Advance());
  return out;
}

MonteCarloEstimate monte_carlo(const RandomizedRun& run, std::uint64_t samples,
                               std::uint64_t seed) {
  if (samples < 2) throw InvalidArgument("monte_carlo: need >= 2 samples");
  // Welford
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    SeededChooser chooser(DeriveSeed(seed, t));
    const double v = run(chooser);
    const double delta = v - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (v - mean);
  }
  const double variance = m2 / static_cast<double>(samples - 1);
  return {mean, std::sqrt(variance / static_cast<double>(samples)), samples};
}

std::string_view ToString(Provenance provenance) {
  switch (provenance) {
    case Provenance::kProved:
      return "proved";
    case Provenance::kClaimedFlawed:
      return "claimed-flawed";
    case Provenance::kAuthorsConjecture:
      return "authors-conjecture";
  }
  return "unknown";
}

std::string_view ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

double BoundFormula::Evaluate(const BoundParams& params) const {
  for (const auto& name : parameters) {
    if (!params.contains(name)) {
      throw InvalidArgument("bound " + id + ": missing parameter " + name);
    }
  }
  return formula(params);
}

const BoundFormula& GetBound(std::string_view id) {
  for (const auto& b : Registry()) {
    if (b.id == id) return b;
  }
  throw InvalidArgument("unknown bound id: " + std::string(id));
}

std::vector<std::string> BoundIds() {
  std::vector<std::string> ids;
  for (const auto& b : Registry()) ids.push_back(b.id);
  return ids;
}

GuaranteeReport check_bound(const Measurement& measured,
                            const OptimumCertificate& cert,
                            const BoundFormula& bound, BoundParams params) {
  if (!params.contains("OPT")) params["OPT"] = cert.upper();
  GuaranteeReport r;
  r.bound_id = bound.id;
  r.provenance = bound.provenance;
  r.measured = measured.value;
  r.exact = measured.exact;
  r.half_width = measured.exact ? 0.0 : measured.half_width;
  r.opt = params.at("OPT");
  r.threshold = bound.Evaluate(params) - cert.radius;
  r.slack = measured.value - r.threshold;
  const double tol = 1e-9 * std::max(1.0, std::abs(r.threshold));
  if (measured.exact) {
    r.verdict = r.slack >= -tol ? Verdict::kHolds : Verdict::kViolated;
  } else {
    r.verdict = r.slack - r.half_width >= -tol ? Verdict::kHolds
                                               : Verdict::kInconclusive;
  }
  return r;
}

}  // namespace sublab
