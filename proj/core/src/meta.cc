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

#include "noisysub/meta.h"

#include <stdexcept>
#include <string>

namespace noisysub {

void Validate(const MetaConfig& config) {
  const bool degenerate = config.h == 0 && config.t == 0;
  if (!degenerate && !(config.t >= 0 && config.t < config.h)) {
    throw std::invalid_argument("meta config needs 0 <= t < h or h = t = 0");
  }
  if (config.h > config.matroid.Rank()) {
    throw std::invalid_argument("h = " + std::to_string(config.h) +
                                " exceeds the matroid rank " +
                                std::to_string(config.matroid.Rank()));
  }
  if (config.m < 1) throw std::invalid_argument("m must be >= 1");
  if (static_cast<uint64_t>(config.m) > Binomial(config.h, config.t)) {
    throw std::invalid_argument("m = " + std::to_string(config.m) +
                                " exceeds C(h, t) = " +
                                std::to_string(Binomial(config.h, config.t)));
  }
  Validate(config.inner);
}

MetaResult MetaSolveDetailed(const ValueOracle& oracle, const MetaConfig& config,
                             Rng& rng) {
  Validate(config);
  const int n = oracle.ground_size();
  if (config.matroid.ground_size() != n) {
    throw std::invalid_argument("matroid and oracle ground sizes differ");
  }
  MetaResult result;
  const ElementSet basis = config.matroid.ArbitraryBasis();
  result.smoothing_set = SampleRandomSubset(basis, config.h, rng);
  // The identity surrogate draws nothing, so h = 0 leaves `rng` untouched for
  // the inner solver.
  SurrogateConfig surrogate =
      config.h == 0 ? SurrogateConfig::Identity(n)
                    : SurrogateConfig::Sample(result.smoothing_set, config.t,
                                              config.m, rng);
  const SampledSurrogateOracle smoothed(oracle, std::move(surrogate));
  const Matroid contracted = Matroid::Contract(config.matroid, result.smoothing_set);
  result.inner_solution = RunSolver(smoothed, contracted, config.inner, rng);
  result.completion = SampleRandomSubset(result.smoothing_set, config.t, rng);
  result.solution = result.inner_solution | result.completion;
  return result;
}

ElementSet MetaSolve(const ValueOracle& oracle, const MetaConfig& config,
                     Rng& rng) {
  return MetaSolveDetailed(oracle, config, rng).solution;
}

ElementSet MetaSolve(const ValueOracle& oracle, const MetaConfig& config) {
  Rng rng(config.seed);
  return MetaSolve(oracle, config, rng);
}

double ComparisonSurrogate(const ValueOracle& oracle, const ElementSet& s) {
  if (s.Empty()) {
    throw std::invalid_argument("comparison surrogate of the empty set");
  }
  double sum = 0.0;
  s.ForEach([&](int e) { sum += oracle.Value(s.Without(e)); });
  return sum / s.Size();
}

BestOfTResult BestOfTDetailed(const ValueOracle& oracle, const MetaConfig& config,
                              int runs, Rng& rng) {
  if (runs < 1) throw std::invalid_argument("best-of-T needs T >= 1");
  BestOfTResult result;
  size_t best = 0;
  for (int i = 0; i < runs; ++i) {
    ElementSet candidate = MetaSolve(oracle, config, rng);
    const double score =
        candidate.Empty() ? 0.0 : ComparisonSurrogate(oracle, candidate);
    if (i == 0 || score > result.scores[best]) best = i;
    result.candidates.push_back(std::move(candidate));
    result.scores.push_back(score);
  }
  result.best = result.candidates[best];
  return result;
}

ElementSet BestOfT(const ValueOracle& oracle, const MetaConfig& config, int runs,
                   Rng& rng) {
  return BestOfTDetailed(oracle, config, runs, rng).best;
}

}  // namespace noisysub
