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

#include "noisysub/random.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace noisysub {
namespace {

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

double ToUnit(uint64_t bits) { return static_cast<double>(bits >> 11) * kTwoPow53Inv; }

double ToUnitOpenLow(uint64_t bits) {
  return static_cast<double>((bits >> 11) + 1) * kTwoPow53Inv;
}

double BoxMuller(double u1_open_low, double u2) {
  return std::sqrt(-2.0 * std::log(u1_open_low)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t Fmix64(uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdull;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ull;
  k ^= k >> 33;
  return k;
}

}  // namespace

uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t parent, uint64_t tag) {
  return Mix64(Mix64(parent) ^ Mix64(tag + 0x632be59bd9b4e019ull));
}

uint64_t DeriveSeed(uint64_t parent, std::string_view tag) {
  // FNV-1a.
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return DeriveSeed(parent, h);
}

double Rng::Uniform01() { return ToUnit(engine_()); }

double Rng::Uniform01OpenLow() { return ToUnitOpenLow(engine_()); }

uint64_t Rng::UniformInt(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("UniformInt bound must be > 0");
  // Lemire's multiply-shift with rejection.
  uint64_t x = engine_();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < bound) {
    const uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = engine_();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

double Rng::Normal() {
  const double u1 = Uniform01OpenLow();
  const double u2 = Uniform01();
  return BoxMuller(u1, u2);
}

Uint128 Fingerprint128(std::span<const uint64_t> words, uint64_t seed) {
  constexpr uint64_t c1 = 0x87c37b91114253d5ull;
  constexpr uint64_t c2 = 0x4cf5ad432745937full;
  uint64_t h1 = seed;
  uint64_t h2 = seed;
  const size_t blocks = words.size() / 2;
  for (size_t i = 0; i < blocks; ++i) {
    uint64_t k1 = words[2 * i];
    uint64_t k2 = words[2 * i + 1];

    k1 *= c1;
    k1 = std::rotl(k1, 31);
    k1 *= c2;
    h1 ^= k1;
    h1 = std::rotl(h1, 27);
    h1 += h2;
    h1 = h1 * 5 + 0x52dce729;

    k2 *= c2;
    k2 = std::rotl(k2, 33);
    k2 *= c1;
    h2 ^= k2;
    h2 = std::rotl(h2, 31);
    h2 += h1;
    h2 = h2 * 5 + 0x38495ab5;
  }
  if (words.size() % 2 == 1) {
    uint64_t k1 = words.back();
    k1 *= c1;
    k1 = std::rotl(k1, 31);
    k1 *= c2;
    h1 ^= k1;
  }
  const uint64_t len = words.size() * 8;
  h1 ^= len;
  h2 ^= len;
  h1 += h2;
  h2 += h1;
  h1 = Fmix64(h1);
  h2 = Fmix64(h2);
  h1 += h2;
  h2 += h1;
  return {h1, h2};
}

std::array<uint32_t, 4> Philox4x32(std::array<uint32_t, 4> ctr,
                                   std::array<uint32_t, 2> key) {
  constexpr uint32_t kM0 = 0xD2511F53u;
  constexpr uint32_t kM1 = 0xCD9E8D57u;
  constexpr uint32_t kW0 = 0x9E3779B9u;
  constexpr uint32_t kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    const uint64_t p0 = static_cast<uint64_t>(kM0) * ctr[0];
    const uint64_t p1 = static_cast<uint64_t>(kM1) * ctr[2];
    const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32);
    const uint32_t lo0 = static_cast<uint32_t>(p0);
    const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32);
    const uint32_t lo1 = static_cast<uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

CounterStream::CounterStream(uint64_t key, Uint128 start)
    : key_{static_cast<uint32_t>(key), static_cast<uint32_t>(key >> 32)},
      counter_(start) {}

std::array<uint32_t, 4> CounterStream::NextBlock() {
  const std::array<uint32_t, 4> ctr = {
      static_cast<uint32_t>(counter_.lo), static_cast<uint32_t>(counter_.lo >> 32),
      static_cast<uint32_t>(counter_.hi), static_cast<uint32_t>(counter_.hi >> 32)};
  if (++counter_.lo == 0) ++counter_.hi;
  return Philox4x32(ctr, key_);
}

uint64_t CounterStream::NextWord64() {
  if (buffered_ == 0) {
    buffer_ = NextBlock();
    buffered_ = 4;
  }
  const int i = 4 - buffered_;
  buffered_ -= 2;
  return (static_cast<uint64_t>(buffer_[i + 1]) << 32) | buffer_[i];
}

double CounterStream::Uniform01() { return ToUnit(NextWord64()); }

double CounterStream::Uniform01OpenLow() { return ToUnitOpenLow(NextWord64()); }

double CounterStream::Normal() {
  const double u1 = Uniform01OpenLow();
  const double u2 = Uniform01();
  return BoxMuller(u1, u2);
}

}  // namespace noisysub
