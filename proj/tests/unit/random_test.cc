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

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace noisysub {
namespace {

// Known-answer vectors published with the Random123 reference
// implementation of Philox4x32-10.
TEST(PhiloxTest, ZeroCounterZeroKey) {
  const auto out = Philox4x32({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (std::array<uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c,
                                          0x9b00dbd8}));
}

TEST(PhiloxTest, AllOnes) {
  const auto out = Philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                              {0xffffffff, 0xffffffff});
  EXPECT_EQ(out, (std::array<uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6,
                                          0x6d5451fd}));
}

TEST(PhiloxTest, PiDigits) {
  const auto out = Philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                              {0xa4093822, 0x299f31d0});
  EXPECT_EQ(out, (std::array<uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420,
                                          0x24126ea1}));
}

// Values from an independent byte-oriented MurmurHash3_x64_128 written from
// the public algorithm description, over the little-endian bytes of the
// words.
TEST(FingerprintTest, MatchesReferenceMurmur3) {
  const std::vector<uint64_t> a = {5, 0, 0, 0};
  EXPECT_EQ(Fingerprint128(a, 7),
            (Uint128{0x0930202725669318ull, 0x42dfc9d20b6e5811ull}));
  const std::vector<uint64_t> b = {0xdeadbeef, 1, 2, 3};
  EXPECT_EQ(Fingerprint128(b, 42),
            (Uint128{0x2d2097bc8cd0b66dull, 0xcda41a9483f1e374ull}));
  const std::vector<uint64_t> c = {1};
  EXPECT_EQ(Fingerprint128(c, 4),
            (Uint128{0x785f21fd6d4b4912ull, 0xb37779fe022eba68ull}));
  const std::vector<uint64_t> d = {1, 2, 3};
  EXPECT_EQ(Fingerprint128(d, 9),
            (Uint128{0x057f041dc1fc06e5ull, 0xc54863fef4bbf12aull}));
  EXPECT_EQ(Fingerprint128({}, 0), (Uint128{0, 0}));
}

TEST(DeriveSeedTest, DistinctTagsGiveDistinctSeeds) {
  std::set<uint64_t> seen;
  for (uint64_t tag = 0; tag < 10000; ++tag) seen.insert(DeriveSeed(1, tag));
  EXPECT_EQ(seen.size(), 10000u);
  EXPECT_NE(DeriveSeed(1, "noise"), DeriveSeed(1, "instance"));
  EXPECT_NE(DeriveSeed(1, "noise"), DeriveSeed(2, "noise"));
  EXPECT_EQ(DeriveSeed(9, "noise"), DeriveSeed(9, "noise"));
}

TEST(RngTest, Reproducible) {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RngTest, UniformRanges) {
  Rng rng(5);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.Uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const double v = rng.Uniform01OpenLow();
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
  EXPECT_THROW(rng.UniformInt(0), std::invalid_argument);
}

TEST(RngTest, UniformIntIsUniform) {
  Rng rng(11);
  constexpr int kBound = 7;
  constexpr int kDraws = 700000;
  std::array<int, kBound> counts{};
  for (int i = 0; i < kDraws; ++i) ++counts[rng.UniformInt(kBound)];
  const double p = 1.0 / kBound;
  const double sigma = std::sqrt(kDraws * p * (1 - p));
  for (int c : counts) EXPECT_NEAR(c, kDraws * p, 4 * sigma);
}

TEST(RngTest, NormalMoments) {
  Rng rng(17);
  constexpr int kDraws = 400000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double z = rng.Normal();
    sum += z;
    sum_sq += z * z;
  }
  EXPECT_NEAR(sum / kDraws, 0.0, 5.0 / std::sqrt(kDraws));
  // Var(Z^2) = 2.
  EXPECT_NEAR(sum_sq / kDraws, 1.0, 5.0 * std::sqrt(2.0 / kDraws));
}

TEST(CounterStreamTest, SameKeyAndStartReplay) {
  CounterStream a(99, Uint128{3, 4});
  CounterStream b(99, Uint128{3, 4});
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.Normal(), b.Normal());
}

TEST(CounterStreamTest, FirstBlockIsPhiloxOfStart) {
  CounterStream s(0x0000000200000001ull, Uint128{0x0000000400000003ull, 0});
  const auto expected = Philox4x32({3, 4, 0, 0}, {1, 2});
  EXPECT_EQ(s.NextBlock(), expected);
}

TEST(CounterStreamTest, DistinctStartsDiffer) {
  CounterStream a(1, Uint128{0, 0});
  CounterStream b(1, Uint128{1, 0});
  EXPECT_NE(a.NextBlock(), b.NextBlock());
}

TEST(CounterStreamTest, UniformMean) {
  CounterStream s(7, Uint128{0, 0});
  constexpr int kDraws = 200000;
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double u = s.Uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / kDraws, 0.5, 5.0 * std::sqrt(1.0 / 12.0 / kDraws));
}

}  // namespace
}  // namespace noisysub
