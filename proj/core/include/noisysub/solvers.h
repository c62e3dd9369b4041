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

#ifndef NOISYSUB_SOLVERS_H_
#define NOISYSUB_SOLVERS_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "noisysub/element_set.h"
#include "noisysub/fractional_point.h"
#include "noisysub/matroid.h"
#include "noisysub/random.h"
#include "noisysub/set_function.h"

namespace noisysub {

struct GreedyAlgorithm {};

struct DoubleGreedyAlgorithm {
  // Visit elements in a random order instead of ascending id.
  bool shuffle_order = false;
};

struct ContinuousGreedyAlgorithm {
  // Step size; 1/delta must be an integer.
  double delta = 0.01;
  // Samples per marginal estimate when exact_extension is false.
  int partial_samples = 100;
  // Tabulate f and use the exact multilinear extension (n <= 20).
  bool exact_extension = true;
};

struct RandomSubsetAlgorithm {
  int size = 0;
};

using Algorithm = std::variant<GreedyAlgorithm, DoubleGreedyAlgorithm,
                               ContinuousGreedyAlgorithm, RandomSubsetAlgorithm>;

struct SolverConfig {
  Algorithm algorithm = DoubleGreedyAlgorithm{};
  uint64_t seed = 0;
};

void Validate(const Algorithm& algorithm);
// "greedy", "double-greedy", "continuous-greedy" or "random-subset".
std::string AlgorithmName(const Algorithm& algorithm);
// Number of steps 1/delta. Throws unless delta is in (0, 1) with 1/delta an
// integer (up to 1e-9).
int ContinuousGreedySteps(double delta);

// Repeatedly adds the feasible element with the largest positive marginal
// (ties to the smallest id) until none is left.
ElementSet RunGreedy(const ValueOracle& oracle, const Matroid& matroid);

struct DoubleGreedyStep {
  int element = 0;
  double a = 0.0;
  double b = 0.0;
  double p = 0.0;
  bool added = false;
};

// Double greedy over `domain`: X starts empty, Y starts at `domain`, and
// elements outside the domain are never considered. With exact values the
// expected output is at least half the optimum. If `trace` is non-null it
// receives one entry per element.
ElementSet RunDoubleGreedy(const ValueOracle& oracle, const ElementSet& domain,
                           const DoubleGreedyAlgorithm& options, Rng& rng,
                           std::vector<DoubleGreedyStep>* trace = nullptr);
ElementSet RunDoubleGreedy(const ValueOracle& oracle, Rng& rng);

// The probability of adding the element given the two estimated marginals.
double DoubleGreedyProbability(double a, double b);

// Measured continuous greedy: 1/delta steps of
//   x_i <- x_i + delta * (1 - x_i) * [i in I],
// where I is a max-weight independent set for the weights
// E[f(R + i) - f(R)], R ~ x. If `trajectory` is non-null it receives x after
// every step (the starting zero vector excluded).
FractionalPoint RunMeasuredContinuousGreedy(
    const ValueOracle& oracle, const Matroid& matroid,
    const ContinuousGreedyAlgorithm& options, Rng& rng,
    std::vector<FractionalPoint>* trajectory = nullptr);

// Oblivious swap rounding inside each capacity group of `matroid`. Preserves
// every coordinate in expectation and always returns an independent set.
// Throws if x is outside the matroid polytope by more than `tolerance`.
ElementSet PipageRound(const Matroid& matroid, const FractionalPoint& x,
                       Rng& rng, double tolerance = 1e-9);

// Uniform k-subset of `domain`.
ElementSet SampleRandomSubset(const ElementSet& domain, int k, Rng& rng);
ElementSet SampleRandomSubset(const GroundSet& ground, int k, Rng& rng);

// Runs `algorithm` on `oracle` over `matroid` and returns an independent set.
// Double greedy and random subset require a matroid whose available elements
// are all free (IsFree()).
ElementSet RunSolver(const ValueOracle& oracle, const Matroid& matroid,
                     const Algorithm& algorithm, Rng& rng);
ElementSet RunSolver(const ValueOracle& oracle, const Matroid& matroid,
                     const SolverConfig& config);

}  // namespace noisysub

#endif  // NOISYSUB_SOLVERS_H_
