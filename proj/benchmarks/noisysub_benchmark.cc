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


#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "noisysub/generators.h"
#include "noisysub/harness.h"
#include "noisysub/matroid.h"
#include "noisysub/meta.h"
#include "noisysub/noise.h"
#include "noisysub/random.h"
#include "noisysub/solvers.h"
#include "noisysub/surrogate.h"

namespace noisysub {
namespace {

WeightedAdditiveQuadratic Instance(int n) {
  Rng rng(1);
  return RandomCertifiedWaq(n, 20.0, 10.0 / n, rng);
}

void BM_PersistentNoisyValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PersistentNoisyOracle oracle(Instance(n), {GaussianNoise{0.1}}, 1);
  Rng rng(2);
  std::vector<ElementSet> sets;
  for (int i = 0; i < 1024; ++i) sets.push_back(SampleRandomSubset(GroundSet(n), n / 2, rng));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.Value(sets[i++ & 1023]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PersistentNoisyValue)->Arg(50)->Arg(100)->Arg(256);

void BM_SurrogateSampled(benchmark::State& state) {
  const int n = 100;
  const int m = static_cast<int>(state.range(0));
  const PersistentNoisyOracle oracle(Instance(n), {GaussianNoise{0.1}}, 1);
  Rng rng(3);
  const SurrogateConfig config =
      SurrogateConfig::Sample(SampleRandomSubset(GroundSet(n), 20, rng), 4, m, rng);
  const ElementSet s = SampleRandomSubset(GroundSet(n), 50, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SurrogateSampled(oracle, config, s));
  }
}
BENCHMARK(BM_SurrogateSampled)->Arg(50)->Arg(200);

void BM_SampleTSubsets(benchmark::State& state) {
  Rng rng(4);
  const ElementSet h = ElementSet::Full(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SampleTSubsetsWithoutReplacement(h, 4, static_cast<int>(state.range(0)), rng));
  }
}
BENCHMARK(BM_SampleTSubsets)->Arg(50)->Arg(200)->Arg(4845);

void BM_DoubleGreedyNoisy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PersistentNoisyOracle oracle(Instance(n), {GaussianNoise{0.1}}, 1);
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunDoubleGreedy(oracle, rng));
  }
}
BENCHMARK(BM_DoubleGreedyNoisy)->Arg(50)->Arg(100);

void BM_MetaSolve(benchmark::State& state) {
  const int n = 100;
  const PersistentNoisyOracle oracle(Instance(n), {GaussianNoise{0.1}}, 1);
  MetaConfig config;
  config.matroid = Matroid::Unconstrained(n);
  config.h = 20;
  config.t = 4;
  config.m = static_cast<int>(state.range(0));
  Rng rng(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MetaSolve(oracle, config, rng));
  }
}
BENCHMARK(BM_MetaSolve)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ContinuousGreedyExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const ExactOracle oracle(RandomCoverage(n, CoverageParams{}, rng));
  const Matroid matroid = Matroid::Uniform(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunMeasuredContinuousGreedy(oracle, matroid, ContinuousGreedyAlgorithm{0.01}, rng));
  }
}
BENCHMARK(BM_ContinuousGreedyExact)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_PipageRound(benchmark::State& state) {
  const int n = 100;
  const Matroid matroid = Matroid::Uniform(n, 10);
  const FractionalPoint x(std::vector<double>(n, 0.1));
  Rng rng(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(PipageRound(matroid, x, rng));
  }
}
BENCHMARK(BM_PipageRound);

void BM_SimulationTrial(benchmark::State& state) {
  ExperimentSpec spec;
  spec.n = static_cast<int>(state.range(0));
  int trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunTrial(spec, trial++));
  }
}
BENCHMARK(BM_SimulationTrial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace noisysub

BENCHMARK_MAIN();
