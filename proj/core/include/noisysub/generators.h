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

#ifndef NOISYSUB_GENERATORS_H_
#define NOISYSUB_GENERATORS_H_

#include "noisysub/matroid.h"
#include "noisysub/random.h"
#include "noisysub/set_function.h"

namespace noisysub {

struct CoverageParams {
  int items = 20;
  // Each (element, item) incidence is present independently.
  double cover_probability = 0.25;
  // Item weights are uniform on [weight_lo, weight_hi].
  double weight_lo = 0.0;
  double weight_hi = 1.0;
};

Coverage RandomCoverage(int n, const CoverageParams& params, Rng& rng);

// Erdos-Renyi graph with edge weights uniform on (0, 1].
CutFunction RandomCut(int n, double edge_probability, Rng& rng);

// Weights uniform on [lo, hi].
Modular RandomModular(int n, double lo, double hi, Rng& rng);

// Weights uniform on [0, weight_hi], redrawn as a whole until the instance
// passes IsNonNegativeCertified. Throws std::runtime_error after
// `max_attempts` failed draws.
WeightedAdditiveQuadratic RandomCertifiedWaq(int n, double weight_hi,
                                             double cost, Rng& rng,
                                             int max_attempts = 10000);

// Assigns each element to one of `num_parts` parts uniformly, retrying
// until no part is empty, and gives each part a uniform capacity in
// [1, |part|].
Matroid RandomPartitionMatroid(int n, int num_parts, Rng& rng);

}  // namespace noisysub

#endif  // NOISYSUB_GENERATORS_H_
