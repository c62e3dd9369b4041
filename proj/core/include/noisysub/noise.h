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

#ifndef NOISYSUB_NOISE_H_
#define NOISYSUB_NOISE_H_

#include <atomic>
#include <cstdint>
#include <variant>

#include "noisysub/element_set.h"
#include "noisysub/random.h"
#include "noisysub/set_function.h"

namespace noisysub {

// Normal(1, variance).
struct GaussianNoise {
  double variance = 0.1;
};

// Uniform on [1 - half_width, 1 + half_width].
struct BoundedUniformNoise {
  double half_width = 0.0;
};

// 1 - 1/rate + Exponential(rate), so the mean is 1.
struct ShiftedExponentialNoise {
  double rate = 1.0;
};

using NoiseDistribution =
    std::variant<GaussianNoise, BoundedUniformNoise, ShiftedExponentialNoise>;

struct NoiseSpec {
  NoiseDistribution distribution = GaussianNoise{};
  // Maps negative draws to 0. Off by default; a Normal(1, 0.1) draw is
  // negative with probability about 8e-4.
  bool clamp_negative = false;
};

// No noise at all: every multiplier is exactly 1.
inline NoiseSpec NoiselessSpec() { return {BoundedUniformNoise{0.0}, false}; }

// Throws std::invalid_argument for negative variance or width, or a
// non-positive rate.
void Validate(const NoiseSpec& spec);

// (nu, alpha) such that E exp(l (xi - 1)) <= exp(nu^2 l^2 / 2) for
// |l| <= 1/alpha.
struct SubExponentialParams {
  double nu = 0.0;
  double alpha = 0.0;
};

SubExponentialParams SubExponential(const NoiseSpec& spec);
// max(nu, alpha).
double SubExponentialNorm(const NoiseSpec& spec);
double MultiplierVariance(const NoiseSpec& spec);

// One draw of the multiplier.
double SampleMultiplier(const NoiseSpec& spec, CounterStream& stream);

// f~(S) = xi_S * f(S) where xi_S depends only on (master_seed, bits of S).
//
// The multiplier is generated by a Philox stream keyed by the master seed and
// started at a 128-bit fingerprint of the membership bits, so repeated
// queries agree bit for bit and distinct sets use disjoint streams. Nothing
// is cached.
class PersistentNoisyOracle : public ValueOracle {
 public:
  PersistentNoisyOracle(SetFunctionSpec base, NoiseSpec noise,
                        uint64_t master_seed);
  PersistentNoisyOracle(const PersistentNoisyOracle& other);
  PersistentNoisyOracle& operator=(const PersistentNoisyOracle& other);

  int ground_size() const override { return base_.ground_size(); }
  // Counts the query.
  double Value(const ElementSet& s) const override;
  // xi_S. Does not count as a query.
  double Multiplier(const ElementSet& s) const;
  double ExactValue(const ElementSet& s) const { return base_.Value(s); }

  const SetFunctionSpec& base() const { return base_.spec(); }
  const NoiseSpec& noise() const { return noise_; }
  uint64_t master_seed() const { return master_seed_; }
  uint64_t query_count() const {
    return queries_.load(std::memory_order_relaxed);
  }

 private:
  ExactOracle base_;
  NoiseSpec noise_;
  uint64_t master_seed_;
  uint64_t stream_key_;
  mutable std::atomic<uint64_t> queries_{0};
};

// Diagnostic oracle without persistence: every query draws a new
// multiplier, keyed by the query index. Deterministic only when queried from
// one thread in a fixed order.
class FreshNoisyOracle : public ValueOracle {
 public:
  FreshNoisyOracle(SetFunctionSpec base, NoiseSpec noise, uint64_t master_seed);

  int ground_size() const override { return base_.ground_size(); }
  double Value(const ElementSet& s) const override;
  uint64_t query_count() const {
    return queries_.load(std::memory_order_relaxed);
  }

 private:
  ExactOracle base_;
  NoiseSpec noise_;
  uint64_t stream_key_;
  mutable std::atomic<uint64_t> queries_{0};
};

}  // namespace noisysub

#endif  // NOISYSUB_NOISE_H_
