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

#include "noisysub/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "noisysub/generators.h"
#include "noisysub/meta.h"
#include "noisysub/random.h"
#include "noisysub/solvers.h"
#include "noisysub/surrogate.h"

namespace noisysub {
namespace {

constexpr int kMaxInstanceAttempts = 10000;

std::string OursName(int m) { return "Ours(m=" + std::to_string(m) + ")"; }

std::string FormatReal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int ResolveWorkers(int requested, int trials) {
  int workers = requested;
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  return std::min(workers, trials);
}

}  // namespace

void Validate(const ExperimentSpec& spec) {
  GroundSet ground(spec.n);
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(spec.t >= 0 && spec.t < spec.h) && !(spec.h == 0 && spec.t == 0)) {
    throw std::invalid_argument("need 0 <= t < h (or h = t = 0)");
  }
  if (spec.h > spec.n) throw std::invalid_argument("h must not exceed n");
  for (int m : spec.ms) {
    if (m < 1 || static_cast<uint64_t>(m) > Binomial(spec.h, spec.t)) {
      throw std::invalid_argument("m = " + std::to_string(m) +
                                  " must be in [1, C(h, t)]");
    }
  }
  if (!(spec.sigma2 >= 0.0)) throw std::invalid_argument("sigma2 must be >= 0");
  if (!(spec.weight_hi > 0.0)) throw std::invalid_argument("weight_hi must be > 0");
  if (!(CostOf(spec) >= 0.0)) throw std::invalid_argument("cost must be >= 0");
  if (spec.workers < 0) throw std::invalid_argument("workers must be >= 0");
}

double CostOf(const ExperimentSpec& spec) {
  return spec.cost.value_or(10.0 / spec.n);
}

std::vector<std::string> AlgorithmNames(const ExperimentSpec& spec) {
  std::vector<std::string> names = {"DG-exact", "DG-noisy", "Random"};
  for (int m : spec.ms) names.push_back(OursName(m));
  return names;
}

TrialInstance GenerateInstance(const ExperimentSpec& spec, int trial) {
  TrialInstance instance;
  instance.trial_seed = DeriveSeed(spec.master_seed, static_cast<uint64_t>(trial));
  Rng rng(DeriveSeed(instance.trial_seed, "instance"));
  instance.function = RandomCertifiedWaq(spec.n, spec.weight_hi, CostOf(spec), rng,
                                         kMaxInstanceAttempts);
  instance.noise_seed = DeriveSeed(instance.trial_seed, "noise");
  return instance;
}

Optimum OptimumExact(const WeightedAdditiveQuadratic& f) {
  const int n = static_cast<int>(f.weights.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return f.weights[a] > f.weights[b]; });
  double prefix = 0.0;
  double best = 0.0;
  int best_k = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += f.weights[order[k - 1]];
    const double value = prefix - f.cost * k * k;
    if (value > best) {
      best = value;
      best_k = k;
    }
  }
  ElementSet set{GroundSet(n)};
  for (int k = 0; k < best_k; ++k) set.Insert(order[k]);
  // Recompute in element order so the value matches Evaluate bit for bit.
  return {set, Evaluate(f, set)};
}

Optimum OptimumExact(const SetFunctionSpec& spec) {
  const auto* f = std::get_if<WeightedAdditiveQuadratic>(&spec);
  if (f == nullptr) {
    throw std::invalid_argument("closed-form optimum needs a weighted additive "
                                "quadratic function");
  }
  return OptimumExact(*f);
}

std::vector<TrialRecord> RunTrial(const ExperimentSpec& spec, int trial) {
  const TrialInstance instance = GenerateInstance(spec, trial);
  const double opt = OptimumExact(instance.function).value;
  const ExactOracle exact(instance.function);
  const NoiseSpec noise{GaussianNoise{spec.sigma2}, spec.clamp_negative};
  const PersistentNoisyOracle persistent(instance.function, noise,
                                         instance.noise_seed);
  const GroundSet ground(spec.n);
  const std::vector<std::string> names = AlgorithmNames(spec);

  std::vector<TrialRecord> records;
  records.reserve(names.size());
  for (size_t a = 0; a < names.size(); ++a) {
    const std::string& name = names[a];
    Rng rng(DeriveSeed(instance.trial_seed, name));
    std::optional<FreshNoisyOracle> fresh;
    if (spec.noise_mode == NoiseMode::kFresh) {
      fresh.emplace(instance.function, noise,
                    DeriveSeed(instance.noise_seed, name));
    }
    const ValueOracle& noisy =
        fresh.has_value() ? static_cast<const ValueOracle&>(*fresh) : persistent;

    const auto start = std::chrono::steady_clock::now();
    ElementSet solution(ground);
    if (a == 0) {
      solution = RunDoubleGreedy(exact, rng);
    } else if (a == 1) {
      solution = RunDoubleGreedy(noisy, rng);
    } else if (a == 2) {
      solution = SampleRandomSubset(ground, spec.n / 2, rng);
    } else {
      MetaConfig config;
      config.h = spec.h;
      config.t = spec.t;
      config.m = spec.ms[a - 3];
      config.inner = DoubleGreedyAlgorithm{};
      config.matroid = Matroid::Unconstrained(spec.n);
      solution = MetaSolve(noisy, config, rng);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const double value = exact.Value(solution);
    records.push_back({trial, name, opt > 0.0 ? value / opt : 1.0,
                       spec.record_timings ? seconds : 0.0});
  }
  return records;
}

ExperimentResult RunExperiment(const ExperimentSpec& spec) {
  Validate(spec);
  std::vector<std::vector<TrialRecord>> per_trial(spec.trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    while (true) {
      const int trial = next.fetch_add(1);
      if (trial >= spec.trials) return;
      try {
        per_trial[trial] = RunTrial(spec, trial);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(spec.trials);
      }
    }
  };
  const int workers = ResolveWorkers(spec.workers, spec.trials);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  for (auto& records : per_trial) {
    for (auto& r : records) result.records.push_back(std::move(r));
  }
  result.summary = Summarize(AlgorithmNames(spec), result.records);
  return result;
}

std::vector<AlgorithmSummary> Summarize(const std::vector<std::string>& names,
                                        const std::vector<TrialRecord>& records) {
  std::vector<AlgorithmSummary> out;
  for (const std::string& name : names) {
    std::vector<double> ratios;
    for (const auto& r : records) {
      if (r.algorithm == name) ratios.push_back(r.ratio);
    }
    AlgorithmSummary s;
    s.algorithm = name;
    s.trials = static_cast<int>(ratios.size());
    if (!ratios.empty()) {
      double sum = 0.0;
      for (double v : ratios) sum += v;
      s.mean = sum / ratios.size();
      if (ratios.size() > 1) {
        double sq = 0.0;
        for (double v : ratios) sq += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(sq / (ratios.size() - 1));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

void WriteCsv(const ExperimentSpec& spec, const ExperimentResult& result,
              std::ostream& out) {
  out << "# noisysub simulate n=" << spec.n << " trials=" << spec.trials
      << " h=" << spec.h << " t=" << spec.t << " m=";
  for (size_t i = 0; i < spec.ms.size(); ++i) {
    out << (i ? "," : "") << spec.ms[i];
  }
  out << " sigma2=" << FormatReal(spec.sigma2)
      << " weight_hi=" << FormatReal(spec.weight_hi)
      << " cost=" << FormatReal(CostOf(spec)) << " seed=" << spec.master_seed
      << " noise="
      << (spec.noise_mode == NoiseMode::kPersistent ? "persistent" : "fresh")
      << (spec.clamp_negative ? " clamp_negative" : "") << "\n";
  out << "# seconds is empty unless timings were requested\n";
  out << "algorithm,trial,ratio,seconds\n";
  for (const auto& r : result.records) {
    out << r.algorithm << ',' << r.trial << ',' << FormatReal(r.ratio) << ',';
    if (spec.record_timings) out << FormatReal(r.seconds);
    out << '\n';
  }
  out << "# summary (std uses the trials - 1 divisor)\n";
  out << "# algorithm,mean,std,trials\n";
  for (const auto& s : result.summary) {
    out << "# " << s.algorithm << ',' << FormatReal(s.mean) << ','
        << FormatReal(s.stddev) << ',' << s.trials << '\n';
  }
}

void WriteTable(const ExperimentResult& result, std::ostream& out) {
  size_t width = 9;
  for (const auto& s : result.summary) width = std::max(width, s.algorithm.size());
  char line[256];
  std::snprintf(line, sizeof(line), "%-*s  %8s  %8s  %6s\n",
                static_cast<int>(width), "algorithm", "mean", "std", "trials");
  out << line;
  for (const auto& s : result.summary) {
    std::snprintf(line, sizeof(line), "%-*s  %8.3f  %8.3f  %6d\n",
                  static_cast<int>(width), s.algorithm.c_str(), s.mean, s.stddev,
                  s.trials);
    out << line;
  }
}

}  // namespace noisysub
