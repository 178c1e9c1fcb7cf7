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

#ifndef SUBLAB_RANDOM_H_
#define SUBLAB_RANDOM_H_

#include <cstddef>
#include <cstdint>

namespace sublab {

// SplitMix64 finalizer. Used both as a stream generator and as a
// counter-based hash so that every draw is a pure function of (seed, index).
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Seed of the index-th child stream of `seed` (trials, instances, rounds).
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return Mix64(Mix64(seed) ^ Mix64(index + 0x632BE59BD9B4E019ull));
}

// Small portable generator. Standard distributions are implementation
// defined, so every mapping to a range is done here explicitly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return Mix64(state_);
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform integer in [lo, hi].
  int UniformInt(int lo, int hi);
  // Uniform in [0, 1) with 53 random bits.
  double Uniform01();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  bool Bernoulli(double p) { return Uniform01() < p; }
  // k/1024 for k uniform in [lo_k, hi_k]; sums of these are exact in double.
  double Dyadic(int lo_k, int hi_k) { return UniformInt(lo_k, hi_k) / 1024.0; }

 private:
  std::uint64_t state_;
};

// Source of the uniform choices a randomized algorithm makes. Algorithms
// only ever ask for "an index uniform in [0, count)", which lets the same
// code run from a seed or be enumerated exhaustively.
class Chooser {
 public:
  virtual ~Chooser() = default;
  virtual std::size_t Pick(std::size_t count) = 0;
};

// Draw t is a pure function of (seed, t).
class SeededChooser final : public Chooser {
 public:
  explicit SeededChooser(std::uint64_t seed) : seed_(seed) {}
  std::size_t Pick(std::size_t count) override;
  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace sublab

#endif  // SUBLAB_RANDOM_H_
