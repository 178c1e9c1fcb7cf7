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

#include "sublab/polytope.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "sublab/errors.h"

namespace sublab {
namespace {

// Indices with c_i > 0, by decreasing key then increasing index.
std::vector<int> PositiveByKey(const Vector& c, const std::vector<double>& key,
                               const std::vector<int>& among) {
  std::vector<int> idx;
  for (int i : among) {
    if (c[i] > 0.0) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return key[a] > key[b]; });
  return idx;
}

std::vector<int> Iota(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::string_view ToString(PolytopeFamily family) {
  switch (family) {
    case PolytopeFamily::kBox:
      return "box";
    case PolytopeFamily::kCardinality:
      return "cardinality";
    case PolytopeFamily::kPartition:
      return "partition";
    case PolytopeFamily::kKnapsack:
      return "knapsack";
  }
  return "unknown";
}

PolytopeFamily PolytopeFamilyFromString(std::string_view name) {
  if (name == "box") return PolytopeFamily::kBox;
  if (name == "cardinality") return PolytopeFamily::kCardinality;
  if (name == "partition") return PolytopeFamily::kPartition;
  if (name == "knapsack") return PolytopeFamily::kKnapsack;
  throw CapabilityError("unsupported polytope family: " + std::string(name));
}

Polytope::Polytope(PolytopeFamily family, int n)
    : family_(family), n_(GroundSet::Make(n).n) {}

Polytope Polytope::Box(int n) {
  Polytope p(PolytopeFamily::kBox, n);
  p.ComputeDiameter();
  return p;
}

Polytope Polytope::Cardinality(int n, int k) {
  Polytope p(PolytopeFamily::kCardinality, n);
  if (k < 0) throw InvalidArgument("cardinality bound must be >= 0");
  p.k_ = k;
  p.ComputeDiameter();
  return p;
}

Polytope Polytope::Partition(std::vector<int> block_of, std::vector<int> caps) {
  Polytope p(PolytopeFamily::kPartition, static_cast<int>(block_of.size()));
  for (int b : block_of) {
    if (b < 0 || b >= static_cast<int>(caps.size())) {
      throw InvalidArgument("partition block id out of range");
    }
  }
  for (int c : caps) {
    if (c < 0) throw InvalidArgument("partition caps must be >= 0");
  }
  p.block_of_ = std::move(block_of);
  p.caps_ = std::move(caps);
  p.ComputeDiameter();
  return p;
}

Polytope Polytope::Knapsack(std::vector<double> costs, double budget) {
  Polytope p(PolytopeFamily::kKnapsack, static_cast<int>(costs.size()));
  for (double a : costs) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw InvalidArgument("knapsack costs must be finite and positive");
    }
  }
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw InvalidArgument("knapsack budget must be finite and >= 0");
  }
  p.costs_ = std::move(costs);
  p.budget_ = budget;
  p.ComputeDiameter();
  return p;
}

void Polytope::ComputeDiameter() {
  switch (family_) {
    case PolytopeFamily::kBox:
      diameter_ = std::sqrt(static_cast<double>(n_));
      break;
    case PolytopeFamily::kCardinality:
      diameter_ = std::sqrt(static_cast<double>(std::min(k_, n_)));
      break;
    case PolytopeFamily::kPartition: {
      std::vector<int> block_size(caps_.size(), 0);
      for (int b : block_of_) ++block_size[b];
      double total = 0.0;
      for (std::size_t j = 0; j < caps_.size(); ++j) {
        total += std::min(caps_[j], block_size[j]);
      }
      diameter_ = std::sqrt(total);
      break;
    }
    case PolytopeFamily::kKnapsack: {
      // each coordinate is at most min(1, budget / cost_i)
      double total = 0.0;
      for (double a : costs_) {
        const double top = std::min(1.0, budget_ / a);
        total += top * top;
      }
      diameter_ = std::sqrt(total);
      break;
    }
  }
}

bool Polytope::Contains(const Vector& x, double tol) const {
  if (x.size() != n_) return false;
  if ((x.array() < -tol).any() || (x.array() > 1.0 + tol).any()) return false;
  switch (family_) {
    case PolytopeFamily::kBox:
      return true;
    case PolytopeFamily::kCardinality:
      return x.sum() <= k_ + tol;
    case PolytopeFamily::kPartition: {
      std::vector<double> load(caps_.size(), 0.0);
      for (int i = 0; i < n_; ++i) load[block_of_[i]] += x[i];
      for (std::size_t j = 0; j < caps_.size(); ++j) {
        if (load[j] > caps_[j] + tol) return false;
      }
      return true;
    }
    case PolytopeFamily::kKnapsack: {
      double used = 0.0;
      for (int i = 0; i < n_; ++i) used += costs_[i] * x[i];
      return used <= budget_ + tol;
    }
  }
  return false;
}

Vector Polytope::SampleMember(Rng& rng) const {
  Vector x(n_);
  const bool vertex_like = rng.Bernoulli(0.25);
  for (int i = 0; i < n_; ++i) {
    x[i] = vertex_like ? (rng.Bernoulli(0.5) ? 1.0 : 0.0) : rng.Uniform01();
  }
  switch (family_) {
    case PolytopeFamily::kBox:
      break;
    case PolytopeFamily::kCardinality: {
      const double s = x.sum();
      if (s > k_) x *= k_ / s;
      break;
    }
    case PolytopeFamily::kPartition: {
      std::vector<double> load(caps_.size(), 0.0);
      for (int i = 0; i < n_; ++i) load[block_of_[i]] += x[i];
      for (int i = 0; i < n_; ++i) {
        const int b = block_of_[i];
        if (load[b] > caps_[b]) x[i] *= caps_[b] / load[b];
      }
      break;
    }
    case PolytopeFamily::kKnapsack: {
      double used = 0.0;
      for (int i = 0; i < n_; ++i) used += costs_[i] * x[i];
      if (used > budget_) x *= budget_ / used;
      break;
    }
  }
  return x;
}

Vector lmo(const Polytope& p, const Vector& c) {
  const int n = p.dim();
  if (c.size() != n) throw InvalidArgument("lmo: dimension mismatch");
  if (!c.allFinite()) throw InvalidArgument("lmo: objective must be finite");
  Vector x = Vector::Zero(n);
  const std::vector<double> value(c.data(), c.data() + n);
  switch (p.family()) {
    case PolytopeFamily::kBox:
      for (int i = 0; i < n; ++i) x[i] = c[i] > 0.0 ? 1.0 : 0.0;
      break;
    case PolytopeFamily::kCardinality: {
      const auto order = PositiveByKey(c, value, Iota(n));
      for (int t = 0; t < std::min<int>(p.cardinality(), order.size()); ++t) {
        x[order[t]] = 1.0;
      }
      break;
    }
    case PolytopeFamily::kPartition: {
      std::vector<std::vector<int>> blocks(p.caps().size());
      for (int i = 0; i < n; ++i) blocks[p.block_of()[i]].push_back(i);
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        const auto order = PositiveByKey(c, value, blocks[j]);
        const int take = std::min<int>(p.caps()[j], order.size());
        for (int t = 0; t < take; ++t) x[order[t]] = 1.0;
      }
      break;
    }
    case PolytopeFamily::kKnapsack: {
      std::vector<double> density(n);
      for (int i = 0; i < n; ++i) density[i] = c[i] / p.costs()[i];
      double left = p.budget();
      for (int i : PositiveByKey(c, density, Iota(n))) {
        if (left <= 0.0) break;
        x[i] = std::min(1.0, left / p.costs()[i]);
        left -= x[i] * p.costs()[i];
      }
      break;
    }
  }
  return x;
}

}  // namespace sublab
