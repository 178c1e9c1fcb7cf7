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

#include "sublab/random.h"

#include "sublab/errors.h"

namespace sublab {
namespace {

// Lemire's nearly-divisionless bounded draw; `next` supplies raw words.
template <typename Next>
std::uint64_t BoundedDraw(std::uint64_t bound, Next&& next) {
  if (bound == 0) throw InvalidArgument("bounded draw with bound 0");
  unsigned __int128 product =
      static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace

std::uint64_t Rng::Below(std::uint64_t bound) {
  return BoundedDraw(bound, [this] { return Next(); });
}

int Rng::UniformInt(int lo, int hi) {
  if (hi < lo) throw InvalidArgument("UniformInt with hi < lo");
  const auto span = static_cast<std::uint64_t>(static_cast<long long>(hi) -
                                               static_cast<long long>(lo)) +
                    1;
  return lo + static_cast<int>(Below(span));
}

double Rng::Uniform01() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

std::size_t SeededChooser::Pick(std::size_t count) {
  if (count == 0) throw InvalidArgument("Pick from an empty candidate set");
  const std::uint64_t draw_seed = DeriveSeed(seed_, counter_++);
  // Only the first word is consumed in the common case; rejection retries
  // continue the per-draw stream.
  std::uint64_t sub = 0;
  return static_cast<std::size_t>(
      BoundedDraw(count, [&] { return Mix64(draw_seed + sub++); }));
}

}  // namespace sublab
