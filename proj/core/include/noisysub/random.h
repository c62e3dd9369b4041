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

// Random number utilities.
//
// Two kinds of generators live here:
//
//  * Rng: a sequential engine owned by one algorithm run. All conversions to
//    doubles/integers/normals are done here rather than with the standard
//    <random> distributions, whose outputs are implementation-defined. This
//    keeps experiment output identical across standard libraries.
//
//  * CounterStream: a stateless-keyed stream built on Philox4x32-10. The
//    output for a (key, counter) pair is a pure function, which is what makes
//    per-set noise reproducible without memoization.

#ifndef NOISYSUB_RANDOM_H_
#define NOISYSUB_RANDOM_H_

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace noisysub {

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Derives an independent-looking seed from a parent seed and a tag.
uint64_t DeriveSeed(uint64_t parent, uint64_t tag);
uint64_t DeriveSeed(uint64_t parent, std::string_view tag);

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(Mix64(seed)) {}

  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  // Uniform on (0, 1].
  double Uniform01OpenLow();
  // Uniform on {0, ..., bound - 1}. bound must be positive.
  uint64_t UniformInt(uint64_t bound);
  double Normal();
  bool Bernoulli(double p) { return Uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

struct Uint128 {
  uint64_t lo = 0;
  uint64_t hi = 0;

  friend bool operator==(const Uint128&, const Uint128&) = default;
};

// MurmurHash3 x64_128 over a sequence of little-endian 64-bit words.
Uint128 Fingerprint128(std::span<const uint64_t> words, uint64_t seed);

// The Philox4x32 bijection with 10 rounds.
std::array<uint32_t, 4> Philox4x32(std::array<uint32_t, 4> counter,
                                   std::array<uint32_t, 2> key);

// Sequence of blocks Philox(key, start), Philox(key, start + 1), ...
class CounterStream {
 public:
  CounterStream(uint64_t key, Uint128 start);

  std::array<uint32_t, 4> NextBlock();
  // Each call consumes two 32-bit words.
  double Uniform01();
  double Uniform01OpenLow();
  double Normal();

 private:
  uint64_t NextWord64();

  std::array<uint32_t, 2> key_;
  Uint128 counter_;
  std::array<uint32_t, 4> buffer_{};
  int buffered_ = 0;
};

}  // namespace noisysub

#endif  // NOISYSUB_RANDOM_H_
