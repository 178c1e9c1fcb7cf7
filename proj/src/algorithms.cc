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

#include "sublab/algorithms.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sublab/continuous_checks.h"
#include "sublab/errors.h"
#include "sublab/matroid_algorithms.h"
#include "sublab/ratios.h"

namespace sublab {
namespace {

std::vector<double> ToStd(const Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

// ceil(x), except that values within 1e-9 (relative) above an integer are
// treated as that integer so exact ratios such as ln 4 / ln 2 stay exact.
int CeilTolerant(double x) {
  const double below = std::floor(x);
  if (x - below <= 1e-9 * std::max(1.0, std::abs(x))) {
    return static_cast<int>(below);
  }
  return static_cast<int>(std::ceil(x));
}

void RequireEpsilon(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InvalidArgument("epsilon must be in (0, 1), got " +
                          std::to_string(eps));
  }
}

void RequireMonotone(const ContinuousFunction& f, const char* what) {
  if (!f.monotone() || !sampled_monotone(f, 256, 0xC0FFEE)) {
    throw InvalidArgument(std::string(what) + ": objective must be monotone");
  }
}

}  // namespace

int MgfwIterations(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw InvalidArgument("mgfw: epsilon must be in (0, 1]");
  }
  return std::max(1, CeilTolerant(1.0 / eps));
}

RunTrace mgfw(const ContinuousFunction& g, const ContinuousFunction& h,
              const Polytope& p, double eps) {
  if (g.dim() != h.dim() || g.dim() != p.dim()) {
    throw InvalidArgument("mgfw: dimension mismatch");
  }
  RequireMonotone(g, "mgfw");
  const int iterations = MgfwIterations(eps);
  const double step = 1.0 / iterations;

  RunTrace trace;
  trace.algorithm = "mgfw";
  trace.info["iterations"] = iterations;
  trace.info["step"] = step;
  trace.info["epsilon"] = eps;

  Vector y = Vector::Zero(g.dim());
  for (int i = 0; i < iterations; ++i) {
    const Vector grad = g.Gradient(y) + h.Gradient(y);
    const Vector masked = (1.0 - y.array()).matrix().cwiseProduct(grad);
    const Vector s = lmo(p, masked);
    y = mgfw_mask_update(y, s, step);

    TraceStep rec;
    rec.index = i;
    rec.direction = ToStd(s);
    rec.point = ToStd(y);
    rec.step = step;
    rec.value = g.Value(y) + h.Value(y);
    rec.mask_bound = 1.0 - std::pow(1.0 - step, i + 1);
    trace.steps.push_back(std::move(rec));
  }
  trace.point = ToStd(y);
  trace.value = g.Value(y) + h.Value(y);
  return trace;
}

int bicriteria_rounds(int p, double eps) {
  if (p < 1) throw InvalidArgument("bicriteria_rounds: p must be >= 1");
  RequireEpsilon(eps);
  const double ratio = std::log(1.0 / eps) /
                       std::log(static_cast<double>(p + 1) / static_cast<double>(p));
  return std::max(1, CeilTolerant(ratio));
}

int conjectured_rounds(int p, double eps) {
  if (p < 1) throw InvalidArgument("conjectured_rounds: p must be >= 1");
  RequireEpsilon(eps);
  const double ratio = std::log(1.0 / eps) / std::log(static_cast<double>(p + 1));
  return std::max(1, CeilTolerant(ratio));
}

RunTrace multipass_greedy(const SetFunction& f, const PSystem& sys,
                          double eps, std::optional<int> passes) {
  if (f.n() != sys.n()) {
    throw InvalidArgument("multipass_greedy: ground sets differ");
  }
  const int rounds = passes ? *passes : bicriteria_rounds(sys.p(), eps);
  if (rounds < 1) throw InvalidArgument("multipass_greedy: passes must be >= 1");
  if (!IsMonotone(f)) {
    throw InvalidArgument("multipass_greedy: objective must be monotone");
  }

  RunTrace trace;
  trace.algorithm = "multipass-greedy";
  trace.info["p"] = sys.p();
  trace.info["epsilon"] = eps;
  trace.info["rounds"] = rounds;

  Subset solution;
  for (int i = 0; i < rounds; ++i) {
    const ResidualFunction residual(f, solution);
    const Subset pass = psystem_greedy_marginal(residual, sys, Subset());
    solution = solution | pass;

    TraceStep rec;
    rec.index = i;
    rec.candidates = pass.elements();
    rec.state = solution;
    rec.value = f.Value(solution);
    trace.steps.push_back(std::move(rec));
    trace.passes.push_back(pass);
  }
  trace.solution = solution;
  trace.value = f.Value(solution);
  return trace;
}

RunTrace fw_weak_dr(const ContinuousFunction& f, const Polytope& p, int K,
                    double declared_gamma) {
  if (f.dim() != p.dim()) throw InvalidArgument("fw_weak_dr: dimension");
  if (K < 1) throw InvalidArgument("fw_weak_dr: K must be >= 1");
  if (!(declared_gamma >= 0.0 && declared_gamma <= 1.0)) {
    throw InvalidArgument("fw_weak_dr: gamma must be in [0, 1]");
  }
  RequireMonotone(f, "fw_weak_dr");

  RunTrace trace;
  trace.algorithm = "fw-weak-dr";
  trace.info["iterations"] = K;
  trace.info["gamma"] = declared_gamma;

  const double nominal = 1.0 / K;
  double elapsed = 0.0;
  Vector x = Vector::Zero(f.dim());
  for (int k = 0; k < K; ++k) {
    const double step = k + 1 == K ? 1.0 - elapsed : std::min(nominal, 1.0 - elapsed);
    const Vector v = lmo(p, f.Gradient(x));
    x += step * v;
    elapsed += step;

    TraceStep rec;
    rec.index = k;
    rec.direction = ToStd(v);
    rec.point = ToStd(x);
    rec.step = step;
    rec.value = f.Value(x);
    trace.steps.push_back(std::move(rec));
  }
  trace.info["total_step"] = elapsed;
  trace.point = ToStd(x);
  trace.value = f.Value(x);
  return trace;
}

RunTrace randomized_greedy_dummies(const SetFunction& f, int k,
                                   Chooser& chooser) {
  const int n = f.n();
  if (k < 1 || k > n) {
    throw InvalidArgument("randomized_greedy_dummies: need 1 <= k <= n");
  }
  RunTrace trace;
  trace.algorithm = "randomized-greedy-dummies";
  trace.info["k"] = k;

  // (marginal, is_dummy, id)
  using Candidate = std::tuple<double, int, int>;
  Subset chosen;
  std::vector<bool> dummy_used(2 * k, false);
  for (int i = 0; i < k; ++i) {
    const double value = f.Value(chosen);
    std::vector<Candidate> pool;
    for (int u = 0; u < n; ++u) {
      if (!chosen.contains(u)) pool.emplace_back(f.Value(chosen.with(u)) - value, 0, u);
    }
    for (int d = 0; d < 2 * k; ++d) {
      if (!dummy_used[d]) pool.emplace_back(0.0, 1, n + d);
    }
    std::stable_sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
      return std::get<2>(a) < std::get<2>(b);
    });
    pool.resize(k);

    TraceStep rec;
    rec.index = i;
    for (const auto& [gain, is_dummy, id] : pool) {
      rec.candidates.push_back(id);
      rec.marginals.push_back(gain);
    }
    const int pick = rec.candidates[chooser.Pick(pool.size())];
    if (pick >= n) {
      dummy_used[pick - n] = true;
    } else {
      chosen = chosen.with(pick);
    }
    rec.chosen = pick;
    rec.state = chosen;
    rec.value = f.Value(chosen);
    trace.steps.push_back(std::move(rec));
  }
  trace.solution = chosen;
  trace.value = f.Value(chosen);
  return trace;
}

RunTrace randomized_greedy_dummies(const SetFunction& f, int k,
                                   std::uint64_t seed) {
  SeededChooser chooser(seed);
  RunTrace trace = randomized_greedy_dummies(f, k, chooser);
  trace.seed = seed;
  return trace;
}

RunTrace random_greedy_matroid_intersection(const SetFunction& f,
                                            const IndependenceOracle& m1,
                                            const IndependenceOracle& m2,
                                            Chooser& chooser) {
  const int n = f.n();
  if (m1.n() != n || m2.n() != n) {
    throw InvalidArgument("random_greedy_matroid_intersection: ground sets differ");
  }
  RunTrace trace;
  trace.algorithm = "random-greedy-matroid-intersection";
  const int rank = common_rank(m1, m2);
  trace.info["common_rank"] = rank;

  auto extendable = [&](Subset s) {
    for (int u = 0; u < n; ++u) {
      if (!s.contains(u) && m1.IsIndependent(s.with(u)) && m2.IsIndependent(s.with(u))) {
        return true;
      }
    }
    return false;
  };

  Subset chosen;
  int round = 0;
  while (extendable(chosen)) {
    const double value = f.Value(chosen);
    std::vector<double> weights(n, 0.0);
    for (int u = 0; u < n; ++u) {
      if (!chosen.contains(u)) weights[u] = f.Value(chosen.with(u)) - value;
    }
    const ContractedSystem c1(m1, chosen);
    const ContractedSystem c2(m2, chosen);
    const auto best = max_weight_common_independent(c1, c2, weights);
    if (!best || best->empty()) {
      throw std::logic_error("empty candidate set while an extension exists");
    }

    TraceStep rec;
    rec.index = round;
    rec.candidates = best->elements();
    for (int u : rec.candidates) rec.marginals.push_back(weights[u]);
    const int pick = rec.candidates[chooser.Pick(rec.candidates.size())];
    chosen = chosen.with(pick);
    rec.chosen = pick;
    rec.state = chosen;
    rec.value = f.Value(chosen);
    trace.steps.push_back(std::move(rec));
    ++round;
  }
  trace.info["rounds"] = round;
  trace.info["fixed_rounds_would_fail"] = round < rank ? 1.0 : 0.0;
  trace.solution = chosen;
  trace.value = f.Value(chosen);
  return trace;
}

RunTrace random_greedy_matroid_intersection(const SetFunction& f,
                                            const IndependenceOracle& m1,
                                            const IndependenceOracle& m2,
                                            std::uint64_t seed) {
  SeededChooser chooser(seed);
  RunTrace trace = random_greedy_matroid_intersection(f, m1, m2, chooser);
  trace.seed = seed;
  return trace;
}

}  // namespace sublab
