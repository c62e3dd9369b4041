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

#ifndef NOISYSUB_MULTILINEAR_H_
#define NOISYSUB_MULTILINEAR_H_

#include <span>
#include <vector>

#include "noisysub/fractional_point.h"
#include "noisysub/random.h"
#include "noisysub/set_function.h"

namespace noisysub {

inline constexpr int kMaxExactExtensionSize = 20;

// F(x) = E[f(R)] where R contains each i independently with probability x_i.
//
// The exact form tabulates all 2^n values of f once at construction and
// evaluates F by folding one coordinate at a time, O(2^n) per call.
class MultilinearExtension {
 public:
  // n <= kMaxExactExtensionSize.
  explicit MultilinearExtension(const ValueOracle& oracle);
  explicit MultilinearExtension(std::vector<double> table);

  int ground_size() const { return n_; }
  const std::vector<double>& table() const { return table_; }

  double Value(const FractionalPoint& x) const { return Value(x.coords()); }
  double Value(std::span<const double> x) const;

  // dF/dx_i = F(x with x_i = 1) - F(x with x_i = 0).
  double Partial(std::span<const double> x, int i) const;
  // F(x ∨ 1_i) - F(x) for every i, which equals (1 - x_i) * dF/dx_i.
  std::vector<double> MarginalGains(std::span<const double> x) const;

 private:
  void CheckPoint(std::span<const double> x) const;

  int n_;
  std::vector<double> table_;
};

double MultilinearExact(const ValueOracle& oracle, const FractionalPoint& x);
double MultilinearExact(const SetFunctionSpec& spec, const FractionalPoint& x);

double MultilinearPartialExact(const ValueOracle& oracle,
                               const FractionalPoint& x, int i);

// Unbiased estimate of dF/dx_i: the mean of f(R + i) - f(R - i) over
// `samples` independent draws R ~ x.
double MultilinearPartialSampled(const ValueOracle& oracle,
                                 const FractionalPoint& x, int i, int samples,
                                 Rng& rng);

// Draws R ~ x.
ElementSet SampleFromPoint(std::span<const double> x, Rng& rng);

}  // namespace noisysub

#endif  // NOISYSUB_MULTILINEAR_H_
