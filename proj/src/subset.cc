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

#include "sublab/subset.h"

#include <string>

#include "sublab/errors.h"

namespace sublab {

void RequireAtMost(int n, int limit, const std::string& what) {
  if (n > limit) {
    throw CapabilityError(what + ": ground set size " + std::to_string(n) +
                          " exceeds the exhaustive limit " +
                          std::to_string(limit));
  }
}

GroundSet GroundSet::Make(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw InvalidArgument("ground set size must be in [1, 64], got " +
                          std::to_string(n));
  }
  return GroundSet{n};
}

Subset Subset::Of(std::initializer_list<int> elements) {
  return Of(std::vector<int>(elements));
}

Subset Subset::Of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int u : elements) {
    if (u < 0 || u >= kMaxGroundSize) {
      throw InvalidArgument("element id out of range: " + std::to_string(u));
    }
    m |= Mask{1} << u;
  }
  return Subset(m);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int u) { out.push_back(u); });
  return out;
}

std::string Subset::ToString() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int u) {
    if (!first) s += ',';
    s += std::to_string(u);
    first = false;
  });
  return s + "}";
}

}  // namespace sublab
