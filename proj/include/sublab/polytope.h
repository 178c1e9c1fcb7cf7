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

#ifndef SUBLAB_POLYTOPE_H_
#define SUBLAB_POLYTOPE_H_

#include <string_view>
#include <vector>

#include "sublab/continuous.h"
#include "sublab/random.h"

namespace sublab {

enum class PolytopeFamily { kBox, kCardinality, kPartition, kKnapsack };

std::string_view ToString(PolytopeFamily family);
PolytopeFamily PolytopeFamilyFromString(std::string_view name);

// Down-closed polytope inside [0,1]^n with an exact linear maximization
// oracle and a closed-form bound D >= max ||x||_2 over its vertices.
//
//   box          [0,1]^n
//   cardinality  sum x <= k
//   partition    sum_{i in block j} x_i <= cap_j
//   knapsack     cost . x <= budget, costs > 0
class Polytope {
 public:
  static Polytope Box(int n);
  static Polytope Cardinality(int n, int k);
  // block_of[i] in [0, caps.size()).
  static Polytope Partition(std::vector<int> block_of, std::vector<int> caps);
  static Polytope Knapsack(std::vector<double> costs, double budget);

  PolytopeFamily family() const { return family_; }
  int dim() const { return n_; }
  int cardinality() const { return k_; }
  const std::vector<int>& block_of() const { return block_of_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::vector<double>& costs() const { return costs_; }
  double budget() const { return budget_; }

  bool Contains(const Vector& x, double tol = 1e-9) const;
  double diameter() const { return diameter_; }

  // Uniform-in-cube draw shrunk into P; sometimes a random vertex.
  Vector SampleMember(Rng& rng) const;

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  Polytope(PolytopeFamily family, int n);
  void ComputeDiameter();

  PolytopeFamily family_;
  int n_;
  int k_ = 0;
  std::vector<int> block_of_;
  std::vector<int> caps_;
  std::vector<double> costs_;
  double budget_ = 0.0;
  double diameter_ = 0.0;
};

// argmax_{x in P} <c, x>. Only coordinates with c_i > 0 are ever raised;
// ties go to the lowest index.
Vector lmo(const Polytope& p, const Vector& c);

}  // namespace sublab

#endif  // SUBLAB_POLYTOPE_H_
