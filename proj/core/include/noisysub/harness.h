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

#ifndef NOISYSUB_HARNESS_H_
#define NOISYSUB_HARNESS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "noisysub/noise.h"
#include "noisysub/set_function.h"

namespace noisysub {

enum class NoiseMode {
  // One multiplier per set, fixed for the whole trial.
  kPersistent,
  // A new multiplier on every query (diagnostic only).
  kFresh,
};

// Monte-Carlo comparison on random weighted additive functions with
// quadratic cost: w_i ~ Uniform[0, weight_hi], f(S) = w(S) - c |S|^2, and
// multiplicative Normal(1, sigma2) noise. Five algorithms run on every
// instance: double greedy with exact values ("DG-exact"), double greedy on
// the noisy values ("DG-noisy"), a uniform subset of size floor(n/2)
// ("Random"), and the smoothed meta-algorithm with a double greedy inner
// solver for each m in `ms` ("Ours(m=...)").
struct ExperimentSpec {
  int n = 50;
  int trials = 1000;
  int h = 20;
  int t = 4;
  std::vector<int> ms = {50, 200};
  double sigma2 = 0.1;
  double weight_hi = 20.0;
  // Defaults to 10 / n.
  std::optional<double> cost;
  bool clamp_negative = false;
  uint64_t master_seed = 1;
  // 0 means std::thread::hardware_concurrency().
  int workers = 0;
  NoiseMode noise_mode = NoiseMode::kPersistent;
  // Fill the seconds column. Off by default so output is reproducible.
  bool record_timings = false;
};

void Validate(const ExperimentSpec& spec);
double CostOf(const ExperimentSpec& spec);
std::vector<std::string> AlgorithmNames(const ExperimentSpec& spec);

struct TrialInstance {
  WeightedAdditiveQuadratic function;
  // Seed of the trial's noise world.
  uint64_t noise_seed = 0;
  // Per-trial root seed from which algorithm seeds are derived.
  uint64_t trial_seed = 0;
};

// Deterministic in (spec.master_seed, trial). Throws std::runtime_error if
// no certified non-negative instance is found within 10^4 draws.
TrialInstance GenerateInstance(const ExperimentSpec& spec, int trial);

// The best prefix of the weights sorted in decreasing order; exact because
// the cost only depends on |S|. Ties go to the smaller index.
Optimum OptimumExact(const WeightedAdditiveQuadratic& f);
// Throws std::invalid_argument for other variants.
Optimum OptimumExact(const SetFunctionSpec& spec);

struct TrialRecord {
  int trial = 0;
  std::string algorithm;
  // f(ALG) / f(O*) with exact values; 1 when f(O*) = 0.
  double ratio = 0.0;
  double seconds = 0.0;
};

struct AlgorithmSummary {
  std::string algorithm;
  double mean = 0.0;
  // Sample standard deviation with the (trials - 1) divisor; 0 for one trial.
  double stddev = 0.0;
  int trials = 0;
};

struct ExperimentResult {
  // Ordered by trial, then by AlgorithmNames().
  std::vector<TrialRecord> records;
  std::vector<AlgorithmSummary> summary;
};

// Runs all algorithms on one trial.
std::vector<TrialRecord> RunTrial(const ExperimentSpec& spec, int trial);

// Trials run on a pool of spec.workers threads. The result does not depend
// on the worker count.
ExperimentResult RunExperiment(const ExperimentSpec& spec);

std::vector<AlgorithmSummary> Summarize(const std::vector<std::string>& names,
                                        const std::vector<TrialRecord>& records);

// Header comments, one `algorithm,trial,ratio,seconds` row per record, then
// a commented summary block. Reals are printed with 17 significant digits.
void WriteCsv(const ExperimentSpec& spec, const ExperimentResult& result,
              std::ostream& out);
// Aligned human-readable summary.
void WriteTable(const ExperimentResult& result, std::ostream& out);

}  // namespace noisysub

#endif  // NOISYSUB_HARNESS_H_
