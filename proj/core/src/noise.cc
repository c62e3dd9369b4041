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

#include "noisysub/noise.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace noisysub {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void CheckGround(const ElementSet& s, int n) {
  if (s.ground_size() != n) {
    throw std::invalid_argument("noisy oracle queried with a set over the "
                                "wrong ground set");
  }
}

}  // namespace

void Validate(const NoiseSpec& spec) {
  std::visit(Overloaded{
                 [](const GaussianNoise& g) {
                   if (!(g.variance >= 0.0) || !std::isfinite(g.variance)) {
                     throw std::invalid_argument("variance must be >= 0");
                   }
                 },
                 [](const BoundedUniformNoise& u) {
                   if (!(u.half_width >= 0.0) || !std::isfinite(u.half_width)) {
                     throw std::invalid_argument("half width must be >= 0");
                   }
                 },
                 [](const ShiftedExponentialNoise& e) {
                   if (!(e.rate > 0.0) || !std::isfinite(e.rate)) {
                     throw std::invalid_argument("rate must be > 0");
                   }
                 },
             },
             spec.distribution);
}

SubExponentialParams SubExponential(const NoiseSpec& spec) {
  return std::visit(
      Overloaded{
          [](const GaussianNoise& g) {
            return SubExponentialParams{std::sqrt(g.variance), 0.0};
          },
          [](const BoundedUniformNoise& u) {
            return SubExponentialParams{2.0 * u.half_width, 0.0};
          },
          [](const ShiftedExponentialNoise& e) {
            return SubExponentialParams{2.0 / e.rate, 2.0 / e.rate};
          },
      },
      spec.distribution);
}

double SubExponentialNorm(const NoiseSpec& spec) {
  const SubExponentialParams p = SubExponential(spec);
  return std::max(p.nu, p.alpha);
}

double MultiplierVariance(const NoiseSpec& spec) {
  return std::visit(
      Overloaded{
          [](const GaussianNoise& g) { return g.variance; },
          [](const BoundedUniformNoise& u) {
            return u.half_width * u.half_width / 3.0;
          },
          [](const ShiftedExponentialNoise& e) { return 1.0 / (e.rate * e.rate); },
      },
      spec.distribution);
}

double SampleMultiplier(const NoiseSpec& spec, CounterStream& stream) {
  const double xi = std::visit(
      Overloaded{
          [&](const GaussianNoise& g) {
            return 1.0 + std::sqrt(g.variance) * stream.Normal();
          },
          [&](const BoundedUniformNoise& u) {
            if (u.half_width == 0.0) return 1.0;
            return 1.0 - u.half_width + 2.0 * u.half_width * stream.Uniform01();
          },
          [&](const ShiftedExponentialNoise& e) {
            return 1.0 - 1.0 / e.rate - std::log(stream.Uniform01OpenLow()) / e.rate;
          },
      },
      spec.distribution);
  return spec.clamp_negative ? std::max(xi, 0.0) : xi;
}

PersistentNoisyOracle::PersistentNoisyOracle(SetFunctionSpec base,
                                             NoiseSpec noise,
                                             uint64_t master_seed)
    : base_(std::move(base)),
      noise_(std::move(noise)),
      master_seed_(master_seed),
      stream_key_(DeriveSeed(master_seed, "persistent-noise")) {
  Validate(noise_);
}

PersistentNoisyOracle::PersistentNoisyOracle(const PersistentNoisyOracle& other)
    : base_(other.base_),
      noise_(other.noise_),
      master_seed_(other.master_seed_),
      stream_key_(other.stream_key_),
      queries_(other.query_count()) {}

PersistentNoisyOracle& PersistentNoisyOracle::operator=(
    const PersistentNoisyOracle& other) {
  if (this != &other) {
    base_ = other.base_;
    noise_ = other.noise_;
    master_seed_ = other.master_seed_;
    stream_key_ = other.stream_key_;
    queries_.store(other.query_count(), std::memory_order_relaxed);
  }
  return *this;
}

double PersistentNoisyOracle::Multiplier(const ElementSet& s) const {
  CheckGround(s, ground_size());
  CounterStream stream(stream_key_,
                       Fingerprint128(s.words(), static_cast<uint64_t>(s.ground_size())));
  return SampleMultiplier(noise_, stream);
}

double PersistentNoisyOracle::Value(const ElementSet& s) const {
  queries_.fetch_add(1, std::memory_order_relaxed);
  return Multiplier(s) * base_.Value(s);
}

FreshNoisyOracle::FreshNoisyOracle(SetFunctionSpec base, NoiseSpec noise,
                                   uint64_t master_seed)
    : base_(std::move(base)),
      noise_(std::move(noise)),
      stream_key_(DeriveSeed(master_seed, "fresh-noise")) {
  Validate(noise_);
}

double FreshNoisyOracle::Value(const ElementSet& s) const {
  CheckGround(s, ground_size());
  const uint64_t index = queries_.fetch_add(1, std::memory_order_relaxed);
  // Each query gets its own 2^64-block slice of the counter space.
  CounterStream stream(stream_key_, Uint128{0, index});
  return SampleMultiplier(noise_, stream) * base_.Value(s);
}

}  // namespace noisysub
