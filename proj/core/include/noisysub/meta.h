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

#ifndef NOISYSUB_META_H_
#define NOISYSUB_META_H_

#include <cstdint>
#include <vector>

#include "noisysub/element_set.h"
#include "noisysub/matroid.h"
#include "noisysub/random.h"
#include "noisysub/set_function.h"
#include "noisysub/solvers.h"
#include "noisysub/surrogate.h"

namespace noisysub {

// Smoothing parameters, the wrapped solver and the constraint.
struct MetaConfig {
  int h = 0;
  int t = 0;
  int m = 1;
  Algorithm inner = DoubleGreedyAlgorithm{};
  Matroid matroid = Matroid::Unconstrained(1);
  uint64_t seed = 0;
};

// Throws std::invalid_argument unless 0 <= t < h (or h = t = 0),
// h <= rank, 1 <= m <= C(h, t), and the inner algorithm is valid.
void Validate(const MetaConfig& config);

struct MetaResult {
  // S_H ∪ H'.
  ElementSet solution;
  // H, drawn from the arbitrary basis.
  ElementSet smoothing_set;
  // S_H, the inner solver's answer on the contracted matroid.
  ElementSet inner_solution;
  // H', the t-subset of H added back.
  ElementSet completion;
};

// Draws H uniformly from a fixed basis, freezes m t-subsets of H, runs the
// inner solver on the sampled surrogate over the matroid contracted by H,
// and adds a uniform t-subset of H to the result. All randomness comes from
// `rng`. The output is independent in config.matroid.
MetaResult MetaSolveDetailed(const ValueOracle& oracle, const MetaConfig& config,
                             Rng& rng);
ElementSet MetaSolve(const ValueOracle& oracle, const MetaConfig& config,
                     Rng& rng);
// Uses Rng(config.seed).
ElementSet MetaSolve(const ValueOracle& oracle, const MetaConfig& config);

// f0(S) = (1/|S|) * sum_{e in S} oracle(S - e). Throws on the empty set.
double ComparisonSurrogate(const ValueOracle& oracle, const ElementSet& s);

struct BestOfTResult {
  ElementSet best;
  std::vector<ElementSet> candidates;
  std::vector<double> scores;
};

// Runs MetaSolve `runs` times with successive draws from `rng` and keeps the
// candidate with the largest f0 (first one on ties). The selection rule is
// only justified for monotone f; removing an element can raise the value of
// a non-monotone function. Candidates that are empty score 0.
BestOfTResult BestOfTDetailed(const ValueOracle& oracle, const MetaConfig& config,
                              int runs, Rng& rng);
ElementSet BestOfT(const ValueOracle& oracle, const MetaConfig& config, int runs,
                   Rng& rng);

}  // namespace noisysub

#endif  // NOISYSUB_META_H_
