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


#include "noisysub/generators.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "noisysub/random.h"
#include "noisysub/set_function.h"

namespace noisysub {
namespace {

TEST(GeneratorsTest, CertifiedWaqIsNonNegative) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = RandomCertifiedWaq(12, 20.0, 10.0 / 12, rng);
    ASSERT_TRUE(IsNonNegativeCertified(f));
    for (uint64_t mask = 0; mask < (uint64_t{1} << 12); mask += 37) {
      EXPECT_GE(Evaluate(f, ElementSet::FromMask(12, mask)), 0.0);
    }
  }
}

TEST(GeneratorsTest, ConstantWeightsAreCertified) {
  const int n = 50;
  const WeightedAdditiveQuadratic f{std::vector<double>(n, 20.0), 10.0 / n};
  EXPECT_TRUE(IsNonNegativeCertified(f));
  EXPECT_NEAR(Evaluate(f, ElementSet::Full(n)), 10.0 * n, 1e-9);
}

TEST(GeneratorsTest, WaqWeightMean) {
  // Cost 0 certifies every draw, so the weights are plain Uniform[0, 20].
  Rng rng(2);
  double sum = 0.0;
  constexpr int kN = 200;
  constexpr int kInstances = 5000;
  for (int i = 0; i < kInstances; ++i) {
    for (double w : RandomCertifiedWaq(kN, 20.0, 0.0, rng).weights) sum += w;
  }
  const double draws = static_cast<double>(kN) * kInstances;
  const double sigma = 20.0 / std::sqrt(12.0) / std::sqrt(draws);
  EXPECT_NEAR(sum / draws, 10.0, 3 * sigma);
}

TEST(GeneratorsTest, ImpossibleCertificationThrows) {
  Rng rng(3);
  EXPECT_THROW(RandomCertifiedWaq(5, 1.0, 100.0, rng, 10), std::runtime_error);
}

TEST(GeneratorsTest, CoverageAndCutAreValid) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Coverage cov = RandomCoverage(10, CoverageParams{}, rng);
    EXPECT_NO_THROW(Validate(cov));
    EXPECT_EQ(GroundSize(cov), 10);
    const CutFunction cut = RandomCut(10, 0.4, rng);
    EXPECT_NO_THROW(Validate(cut));
    for (const auto& e : cut.edges) {
      EXPECT_GT(e.weight, 0.0);
      EXPECT_LE(e.weight, 1.0);
    }
  }
}

TEST(GeneratorsTest, ModularRange) {
  Rng rng(5);
  for (double w : RandomModular(256, -1.0, 2.0, rng).weights) {
    EXPECT_GE(w, -1.0);
    EXPECT_LE(w, 2.0);
  }
}

TEST(GeneratorsTest, PartitionMatroidShape) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Matroid m = RandomPartitionMatroid(10, 3, rng);
    ASSERT_EQ(m.partition_parts().size(), 3u);
    for (size_t j = 0; j < 3; ++j) {
      EXPECT_FALSE(m.partition_parts()[j].empty());
      EXPECT_GE(m.partition_capacities()[j], 1);
      EXPECT_LE(m.partition_capacities()[j],
                static_cast<int>(m.partition_parts()[j].size()));
    }
  }
}

TEST(GeneratorsTest, Deterministic) {
  Rng a(77);
  Rng b(77);
  EXPECT_EQ(RandomCertifiedWaq(20, 20.0, 0.5, a).weights,
            RandomCertifiedWaq(20, 20.0, 0.5, b).weights);
}

}  // namespace
}  // namespace noisysub
