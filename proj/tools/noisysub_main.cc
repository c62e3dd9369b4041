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

// Command-line front end: simulate, solve, check and params.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "noisysub/harness.h"
#include "noisysub/instance_io.h"
#include "noisysub/lemma_checks.h"
#include "noisysub/meta.h"
#include "noisysub/noise.h"
#include "noisysub/solvers.h"
#include "noisysub/surrogate.h"

namespace {

using namespace noisysub;

struct SimulateOptions {
  ExperimentSpec spec;
  std::string noise_mode = "persistent";
  std::string out;
};

struct SolveOptions {
  std::string instance;
  std::string algorithm = "double-greedy";
  std::string inner = "double-greedy";
  double delta = 0.01;
  int partial_samples = 100;
  bool exact_extension = false;
  int size = -1;
  int h = 0;
  int t = 0;
  int m = 1;
  uint64_t seed = 0;
  uint64_t noise_seed = 0;
};

struct CheckOptions {
  uint64_t seed = 1;
};

struct ParamsOptions {
  double epsilon = 1.0;
  double delta = 0.05;
  double f_max = 1.0;
  double nu = 1.0;
  double alpha = 0.0;
  int n = 10;
  std::optional<int> rank;
};

Algorithm MakeAlgorithm(const std::string& name, const SolveOptions& o,
                        int ground_size) {
  if (name == "greedy") return GreedyAlgorithm{};
  if (name == "double-greedy") return DoubleGreedyAlgorithm{};
  if (name == "continuous-greedy") {
    return ContinuousGreedyAlgorithm{o.delta, o.partial_samples, o.exact_extension};
  }
  if (name == "random-subset") {
    return RandomSubsetAlgorithm{o.size >= 0 ? o.size : ground_size / 2};
  }
  throw std::invalid_argument("unknown algorithm \"" + name + "\"");
}

int RunSimulate(SimulateOptions& o) {
  if (o.noise_mode == "persistent") {
    o.spec.noise_mode = NoiseMode::kPersistent;
  } else if (o.noise_mode == "fresh") {
    o.spec.noise_mode = NoiseMode::kFresh;
  } else {
    throw std::invalid_argument("--noise must be persistent or fresh");
  }
  const ExperimentResult result = RunExperiment(o.spec);
  // Keep stdout clean for the CSV when it goes there.
  WriteTable(result, o.out == "-" ? std::cerr : std::cout);
  if (!o.out.empty()) {
    if (o.out == "-") {
      WriteCsv(o.spec, result, std::cout);
    } else {
      std::ofstream file(o.out);
      if (!file) throw std::invalid_argument("cannot write " + o.out);
      WriteCsv(o.spec, result, file);
    }
  }
  return 0;
}

int RunSolve(const SolveOptions& o) {
  const Instance instance = LoadInstance(o.instance);
  const int n = GroundSize(instance.function);
  const Matroid matroid = instance.matroid.value_or(Matroid::Unconstrained(n));
  const ExactOracle exact(instance.function);
  std::unique_ptr<PersistentNoisyOracle> noisy;
  if (instance.noise.has_value()) {
    noisy = std::make_unique<PersistentNoisyOracle>(instance.function,
                                                    *instance.noise, o.noise_seed);
  }
  const ValueOracle& oracle =
      noisy ? static_cast<const ValueOracle&>(*noisy) : exact;

  ElementSet solution{GroundSet(n)};
  if (o.algorithm == "meta") {
    MetaConfig config;
    config.h = o.h;
    config.t = o.t;
    config.m = o.m;
    config.inner = MakeAlgorithm(o.inner, o, n);
    config.matroid = matroid;
    config.seed = o.seed;
    solution = MetaSolve(oracle, config);
  } else {
    solution = RunSolver(oracle, matroid, SolverConfig{MakeAlgorithm(o.algorithm, o, n),
                                                       o.seed});
  }
  std::cout << "solution " << solution.ToString() << "\n";
  std::printf("value %.17g\n", exact.Value(solution));
  if (noisy) {
    std::printf("noisy_value %.17g\n", noisy->Multiplier(solution) * exact.Value(solution));
    std::cout << "noisy_queries " << noisy->query_count() << "\n";
  }
  std::cout << "independent " << (matroid.IsIndependent(solution) ? "yes" : "no")
            << "\n";
  return 0;
}

int RunCheck(const CheckOptions& o) {
  const std::vector<CheckReport> reports = RunCheckSuite(o.seed);
  int failures = 0;
  for (const auto& r : reports) {
    std::printf("[%s] %-45s cases=%llu violations=%llu worst_slack=%.3g\n",
                r.passed() ? "PASS" : "FAIL", r.name.c_str(),
                static_cast<unsigned long long>(r.cases),
                static_cast<unsigned long long>(r.violations), r.worst_slack);
    if (!r.passed()) ++failures;
  }
  std::printf("%d of %zu checks failed\n", failures, reports.size());
  return failures == 0 ? 0 : 1;
}

int RunParams(const ParamsOptions& o) {
  const SurrogateParameters p = ComputeParameters(
      o.epsilon, o.delta, o.f_max, SubExponentialParams{o.nu, o.alpha}, o.n, o.rank);
  std::cout << "m " << p.m << "\n";
  std::cout << "t " << p.t << "\n";
  std::cout << "h " << p.h << "\n";
  std::cout << "h_within_ground " << (p.h_within_ground ? "yes" : "no") << "\n";
  if (p.h_within_rank.has_value()) {
    std::cout << "h_within_rank " << (*p.h_within_rank ? "yes" : "no") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular maximization with persistent noisy value oracles"};
  app.require_subcommand(1);
  // "--h" is the smoothing set size, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  SimulateOptions sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte-Carlo comparison on random instances");
  simulate->add_option("--n", sim.spec.n, "Ground set size")->capture_default_str();
  simulate->add_option("--trials", sim.spec.trials, "Number of trials")
      ->capture_default_str();
  simulate->add_option("--h", sim.spec.h, "Smoothing set size")->capture_default_str();
  simulate->add_option("--t", sim.spec.t, "Subset size")->capture_default_str();
  simulate->add_option("--m", sim.spec.ms, "Sample counts, one algorithm each")
      ->capture_default_str()
      ->delimiter(',');
  simulate->add_option("--sigma2", sim.spec.sigma2, "Noise variance")
      ->capture_default_str();
  simulate->add_option("--seed", sim.spec.master_seed, "Master seed")
      ->capture_default_str();
  simulate->add_option("--workers", sim.spec.workers,
                       "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();
  simulate->add_option("--out", sim.out, "CSV output path ('-' for stdout)");
  simulate->add_option("--noise", sim.noise_mode, "persistent or fresh")
      ->capture_default_str();
  simulate->add_flag("--timings", sim.spec.record_timings,
                     "Fill the seconds column (output is then not reproducible)");
  simulate->add_flag("--clamp-negative", sim.spec.clamp_negative,
                     "Map negative noise multipliers to 0");

  SolveOptions solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "Run one algorithm on an instance file");
  solve->add_option("--instance", solve_opts.instance, "Instance JSON file")->required();
  solve->add_option("--algorithm", solve_opts.algorithm,
                    "greedy | double-greedy | continuous-greedy | random-subset | meta")
      ->capture_default_str();
  solve->add_option("--inner", solve_opts.inner, "Inner algorithm for meta")
      ->capture_default_str();
  solve->add_option("--delta", solve_opts.delta, "Continuous greedy step")
      ->capture_default_str();
  solve->add_option("--partial-samples", solve_opts.partial_samples,
                    "Samples per marginal estimate")
      ->capture_default_str();
  solve->add_flag("--exact-extension", solve_opts.exact_extension,
                  "Use the exact multilinear extension (n <= 20)");
  solve->add_option("--size", solve_opts.size, "Random subset size (default n/2)");
  solve->add_option("--h", solve_opts.h, "Smoothing set size")->capture_default_str();
  solve->add_option("--t", solve_opts.t, "Subset size")->capture_default_str();
  solve->add_option("--m", solve_opts.m, "Sample count")->capture_default_str();
  solve->add_option("--seed", solve_opts.seed, "Algorithm seed")->capture_default_str();
  solve->add_option("--noise-seed", solve_opts.noise_seed, "Noise world seed")
      ->capture_default_str();

  CheckOptions check_opts;
  CLI::App* check = app.add_subcommand("check", "Run the exhaustive property suite");
  check->add_option("--seed", check_opts.seed, "Instance seed")->capture_default_str();

  ParamsOptions params_opts;
  CLI::App* params =
      app.add_subcommand("params", "Smallest (h, t, m) meeting the sample bound");
  params->add_option("--epsilon", params_opts.epsilon)->capture_default_str();
  params->add_option("--delta", params_opts.delta)->capture_default_str();
  params->add_option("--fmax", params_opts.f_max)->capture_default_str();
  params->add_option("--nu", params_opts.nu)->capture_default_str();
  params->add_option("--alpha", params_opts.alpha)->capture_default_str();
  params->add_option("--n", params_opts.n)->capture_default_str();
  params->add_option("--rank", params_opts.rank);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return RunSimulate(sim);
    if (*solve) return RunSolve(solve_opts);
    if (*check) return RunCheck(check_opts);
    if (*params) return RunParams(params_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
