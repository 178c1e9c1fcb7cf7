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

#ifndef SUBLAB_MATROID_H_
#define SUBLAB_MATROID_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sublab/subset.h"

namespace sublab {

// Down-closed independence system over {0, ..., n-1}.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;
  virtual int n() const = 0;
  virtual bool IsIndependent(Subset s) const = 0;
};

enum class MatroidFamily { kUniform, kPartition, kGraphic };

std::string_view ToString(MatroidFamily family);

struct GraphEdge {
  int u = 0;
  int v = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

class Matroid final : public IndependenceOracle {
 public:
  // |S| <= k.
  static Matroid Uniform(int n, int k);
  // Every set is independent.
  static Matroid Free(int n) { return Uniform(n, n); }
  // At most caps[j] elements from block j; block_of[i] in [0, caps.size()).
  static Matroid Partition(std::vector<int> block_of, std::vector<int> caps);
  // Elements are the edges; a set is independent iff it is a forest.
  // Parallel edges are allowed; self-loops are never independent.
  static Matroid Graphic(int vertices, std::vector<GraphEdge> edges);

  int n() const override { return n_; }
  bool IsIndependent(Subset s) const override;

  MatroidFamily family() const { return family_; }
  int uniform_rank() const { return k_; }
  const std::vector<int>& block_of() const { return block_of_; }
  const std::vector<int>& caps() const { return caps_; }
  int vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.family_ == b.family_ && a.n_ == b.n_ && a.k_ == b.k_ &&
           a.block_of_ == b.block_of_ && a.caps_ == b.caps_ &&
           a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  Matroid(MatroidFamily family, int n);

  MatroidFamily family_;
  int n_;
  int k_ = 0;
  std::vector<int> block_of_;
  std::vector<int> caps_;
  int vertices_ = 0;
  std::vector<GraphEdge> edges_;
};

// p-system: either the intersection of p matroids (p = their count) or an
// arbitrary down-closed oracle with a declared p.
class PSystem final : public IndependenceOracle {
 public:
  static PSystem Intersection(std::vector<Matroid> matroids);
  static PSystem Direct(int n, int p, std::function<bool(Subset)> oracle);

  int n() const override { return n_; }
  bool IsIndependent(Subset s) const override;
  int p() const { return p_; }
  bool is_intersection() const { return !oracle_; }
  const std::vector<Matroid>& matroids() const { return matroids_; }

 private:
  PSystem() = default;

  int n_ = 0;
  int p_ = 0;
  std::vector<Matroid> matroids_;
  std::function<bool(Subset)> oracle_;
};

// base / S: T is independent iff T misses S and S u T is independent in base.
class ContractedSystem final : public IndependenceOracle {
 public:
  ContractedSystem(const IndependenceOracle& base, Subset contracted)
      : base_(base), contracted_(contracted) {}

  int n() const override { return base_.n(); }
  bool IsIndependent(Subset t) const override {
    return (t & contracted_).empty() && base_.IsIndependent(contracted_ | t);
  }
  Subset contracted() const { return contracted_; }

 private:
  const IndependenceOracle& base_;
  Subset contracted_;
};

struct AxiomCheck {
  bool ok = true;
  std::string failure;  // which axiom failed
  Subset first;
  Subset second;
};

inline constexpr int kAxiomCheckLimit = 10;

// Exhaustive: empty set independent, down-closure, exchange.
AxiomCheck CheckMatroidAxioms(const IndependenceOracle& m);
// Exhaustive down-closure only (n <= 16).
AxiomCheck CheckDownClosed(const IndependenceOracle& m);

// Random partition matroid with `blocks` blocks and caps in [1, max_cap].
Matroid RandomPartitionMatroid(int n, int blocks, int max_cap,
                               std::uint64_t seed);
// Random multigraph with n edges on `vertices` vertices (no loops).
Matroid RandomGraphicMatroid(int n, int vertices, std::uint64_t seed);

}  // namespace sublab

#endif  // SUBLAB_MATROID_H_
