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

#include "sublab/matroid.h"

#include <numeric>
#include <string>
#include <utility>

#include "sublab/errors.h"
#include "sublab/random.h"

namespace sublab {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False when a and b were already connected.
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::string_view ToString(MatroidFamily family) {
  switch (family) {
    case MatroidFamily::kUniform:
      return "uniform";
    case MatroidFamily::kPartition:
      return "partition";
    case MatroidFamily::kGraphic:
      return "graphic";
  }
  return "unknown";
}

Matroid::Matroid(MatroidFamily family, int n)
    : family_(family), n_(GroundSet::Make(n).n) {}

Matroid Matroid::Uniform(int n, int k) {
  Matroid m(MatroidFamily::kUniform, n);
  if (k < 0) throw InvalidArgument("uniform matroid rank must be >= 0");
  m.k_ = k;
  return m;
}

Matroid Matroid::Partition(std::vector<int> block_of, std::vector<int> caps) {
  Matroid m(MatroidFamily::kPartition, static_cast<int>(block_of.size()));
  for (int b : block_of) {
    if (b < 0 || b >= static_cast<int>(caps.size())) {
      throw InvalidArgument("partition block id out of range");
    }
  }
  for (int c : caps) {
    if (c < 0) throw InvalidArgument("partition caps must be >= 0");
  }
  m.block_of_ = std::move(block_of);
  m.caps_ = std::move(caps);
  return m;
}

Matroid Matroid::Graphic(int vertices, std::vector<GraphEdge> edges) {
  Matroid m(MatroidFamily::kGraphic, static_cast<int>(edges.size()));
  if (vertices < 1) throw InvalidArgument("graphic matroid needs vertices");
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices) {
      throw InvalidArgument("graphic matroid edge endpoint out of range");
    }
  }
  m.vertices_ = vertices;
  m.edges_ = std::move(edges);
  return m;
}

bool Matroid::IsIndependent(Subset s) const {
  if (!s.is_subset_of(Subset::Full(n_))) return false;
  switch (family_) {
    case MatroidFamily::kUniform:
      return s.size() <= k_;
    case MatroidFamily::kPartition: {
      std::vector<int> load(caps_.size(), 0);
      bool ok = true;
      s.for_each([&](int u) {
        if (++load[block_of_[u]] > caps_[block_of_[u]]) ok = false;
      });
      return ok;
    }
    case MatroidFamily::kGraphic: {
      UnionFind forest(vertices_);
      bool ok = true;
      s.for_each([&](int u) {
        if (ok && !forest.Unite(edges_[u].u, edges_[u].v)) ok = false;
      });
      return ok;
    }
  }
  return false;
}

PSystem PSystem::Intersection(std::vector<Matroid> matroids) {
  if (matroids.empty()) throw InvalidArgument("intersection of no matroids");
  const int n = matroids.front().n();
  for (const auto& m : matroids) {
    if (m.n() != n) throw InvalidArgument("matroids on different ground sets");
  }
  PSystem sys;
  sys.n_ = n;
  sys.p_ = static_cast<int>(matroids.size());
  sys.matroids_ = std::move(matroids);
  return sys;
}

PSystem PSystem::Direct(int n, int p, std::function<bool(Subset)> oracle) {
  if (p < 1) throw InvalidArgument("p-system needs p >= 1");
  if (!oracle) throw InvalidArgument("p-system needs an oracle");
  PSystem sys;
  sys.n_ = GroundSet::Make(n).n;
  sys.p_ = p;
  sys.oracle_ = std::move(oracle);
  return sys;
}

bool PSystem::IsIndependent(Subset s) const {
  if (oracle_) return oracle_(s);
  for (const auto& m : matroids_) {
    if (!m.IsIndependent(s)) return false;
  }
  return true;
}

AxiomCheck CheckDownClosed(const IndependenceOracle& m) {
  RequireAtMost(m.n(), 16, "CheckDownClosed");
  if (!m.IsIndependent(Subset())) return {false, "empty set dependent", {}, {}};
  AxiomCheck out;
  ForEachSubsetOf(Subset::Full(m.n()), [&](Subset s) {
    if (!out.ok || !m.IsIndependent(s)) return;
    s.for_each([&](int u) {
      if (out.ok && !m.IsIndependent(s.without(u))) {
        out = {false, "not down-closed", s, s.without(u)};
      }
    });
  });
  return out;
}

AxiomCheck CheckMatroidAxioms(const IndependenceOracle& m) {
  RequireAtMost(m.n(), kAxiomCheckLimit, "CheckMatroidAxioms");
  AxiomCheck down = CheckDownClosed(m);
  if (!down.ok) return down;
  std::vector<Subset> independent;
  ForEachSubsetOf(Subset::Full(m.n()), [&](Subset s) {
    if (m.IsIndependent(s)) independent.push_back(s);
  });
  for (Subset small : independent) {
    for (Subset large : independent) {
      if (small.size() >= large.size()) continue;
      bool extended = false;
      (large - small).for_each([&](int e) {
        if (!extended && m.IsIndependent(small.with(e))) extended = true;
      });
      if (!extended) return {false, "exchange", small, large};
    }
  }
  return {};
}

Matroid RandomPartitionMatroid(int n, int blocks, int max_cap,
                               std::uint64_t seed) {
  if (blocks < 1 || max_cap < 1) {
    throw InvalidArgument("partition matroid needs blocks >= 1, cap >= 1");
  }
  Rng rng(seed);
  std::vector<int> block_of(n);
  for (int& b : block_of) b = rng.UniformInt(0, blocks - 1);
  std::vector<int> caps(blocks);
  for (int& c : caps) c = rng.UniformInt(1, max_cap);
  return Matroid::Partition(std::move(block_of), std::move(caps));
}

Matroid RandomGraphicMatroid(int n, int vertices, std::uint64_t seed) {
  if (vertices < 2) throw InvalidArgument("graphic matroid needs 2 vertices");
  Rng rng(seed);
  std::vector<GraphEdge> edges(n);
  for (auto& e : edges) {
    e.u = rng.UniformInt(0, vertices - 1);
    e.v = rng.UniformInt(0, vertices - 2);
    if (e.v >= e.u) ++e.v;
  }
  return Matroid::Graphic(vertices, std::move(edges));
}

}  // namespace sublab
