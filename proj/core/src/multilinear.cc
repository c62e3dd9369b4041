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

#include "noisysub/multilinear.h"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace noisysub {
namespace {

std::vector<double> TabulateForExtension(const ValueOracle& oracle) {
  if (oracle.ground_size() > kMaxExactExtensionSize) {
    throw std::invalid_argument(
        "exact multilinear extension limited to n <= " +
        std::to_string(kMaxExactExtensionSize) + ", got " +
        std::to_string(oracle.ground_size()));
  }
  return TabulateValues(oracle);
}

}  // namespace

MultilinearExtension::MultilinearExtension(const ValueOracle& oracle)
    : MultilinearExtension(TabulateForExtension(oracle)) {}

MultilinearExtension::MultilinearExtension(std::vector<double> table)
    : table_(std::move(table)) {
  if (table_.empty() || !std::has_single_bit(table_.size())) {
    throw std::invalid_argument("value table length must be a power of two");
  }
  n_ = std::countr_zero(table_.size());
  if (n_ > kMaxExactExtensionSize) {
    throw std::invalid_argument("value table too large");
  }
}

void MultilinearExtension::CheckPoint(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw std::invalid_argument("point dimension " + std::to_string(x.size()) +
                                " does not match ground size " +
                                std::to_string(n_));
  }
}

double MultilinearExtension::Value(std::span<const double> x) const {
  CheckPoint(x);
  std::vector<double> v = table_;
  for (int i = n_ - 1; i >= 0; --i) {
    const size_t half = size_t{1} << i;
    const double p = x[i];
    for (size_t s = 0; s < half; ++s) {
      v[s] = (1.0 - p) * v[s] + p * v[s + half];
    }
  }
  return v[0];
}

double MultilinearExtension::Partial(std::span<const double> x, int i) const {
  CheckPoint(x);
  if (i < 0 || i >= n_) throw std::out_of_range("coordinate out of range");
  std::vector<double> y(x.begin(), x.end());
  y[i] = 1.0;
  const double hi = Value(y);
  y[i] = 0.0;
  return hi - Value(y);
}

std::vector<double> MultilinearExtension::MarginalGains(
    std::span<const double> x) const {
  CheckPoint(x);
  std::vector<double> gains(n_);
  for (int i = 0; i < n_; ++i) gains[i] = (1.0 - x[i]) * Partial(x, i);
  return gains;
}

double MultilinearExact(const ValueOracle& oracle, const FractionalPoint& x) {
  return MultilinearExtension(oracle).Value(x);
}

double MultilinearExact(const SetFunctionSpec& spec, const FractionalPoint& x) {
  return MultilinearExact(ExactOracle(spec), x);
}

double MultilinearPartialExact(const ValueOracle& oracle,
                               const FractionalPoint& x, int i) {
  return MultilinearExtension(oracle).Partial(x.coords(), i);
}

ElementSet SampleFromPoint(std::span<const double> x, Rng& rng) {
  ElementSet r(static_cast<int>(x.size()));
  for (size_t j = 0; j < x.size(); ++j) {
    if (rng.Bernoulli(x[j])) r.Insert(static_cast<int>(j));
  }
  return r;
}

double MultilinearPartialSampled(const ValueOracle& oracle,
                                 const FractionalPoint& x, int i, int samples,
                                 Rng& rng) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (x.size() != oracle.ground_size()) {
    throw std::invalid_argument("point dimension does not match oracle");
  }
  if (i < 0 || i >= x.size()) throw std::out_of_range("coordinate out of range");
  double sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    const ElementSet r = SampleFromPoint(x.coords(), rng);
    sum += oracle.Value(r.With(i)) - oracle.Value(r.Without(i));
  }
  return sum / samples;
}

}  // namespace noisysub
