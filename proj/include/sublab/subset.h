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

#ifndef SUBLAB_SUBSET_H_
#define SUBLAB_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sublab {

inline constexpr int kMaxGroundSize = 64;

// Ground set {0, ..., n-1}.
struct GroundSet {
  int n = 0;

  // Throws InvalidArgument unless 1 <= n <= kMaxGroundSize.
  static GroundSet Make(int n);
};

// A subset of a ground set of at most 64 elements, stored as a bitmask.
class Subset {
 public:
  using Mask = std::uint64_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask mask) : mask_(mask) {}

  static Subset Of(std::initializer_list<int> elements);
  static Subset Of(const std::vector<int>& elements);
  static constexpr Subset Full(int n) {
    return Subset(n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int u) const { return (mask_ >> u) & 1u; }
  constexpr bool is_subset_of(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  constexpr Subset with(int u) const { return Subset(mask_ | (Mask{1} << u)); }
  constexpr Subset without(int u) const {
    return Subset(mask_ & ~(Mask{1} << u));
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.mask_ | b.mask_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.mask_ & b.mask_);
  }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

  // Elements in increasing order.
  std::vector<int> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (Mask m = mask_; m != 0; m &= m - 1) fn(std::countr_zero(m));
  }

  // "{0,2,5}"
  std::string ToString() const;

 private:
  Mask mask_ = 0;
};

// Calls fn(Subset) for every subset of `of`, including the empty set and
// `of` itself, in increasing mask order.
template <typename Fn>
void ForEachSubsetOf(Subset of, Fn&& fn) {
  const Subset::Mask full = of.mask();
  Subset::Mask m = 0;
  while (true) {
    fn(Subset(m));
    if (m == full) break;
    m = (m - full) & full;
  }
}

}  // namespace sublab

#endif  // SUBLAB_SUBSET_H_
