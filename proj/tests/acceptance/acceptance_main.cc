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


// Acceptance suite. Each criterion prints its measurements followed by one
// "[PASS] criterion N: ..." or "[FAIL] criterion N: ..." line. Without
// --criterion every criterion runs in order.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "noisysub/generators.h"
#include "noisysub/harness.h"
#include "noisysub/lemma_checks.h"
#include "noisysub/matroid.h"
#include "noisysub/multilinear.h"
#include "noisysub/noise.h"
#include "noisysub/random.h"
#include "noisysub/set_function.h"
#include "noisysub/solvers.h"
#include "noisysub/surrogate.h"

namespace {

using namespace noisysub;

struct Options {
  int criterion = 0;
  int workers = 0;
  std::string cli;
};

struct Sample {
  double mean = 0.0;
  double standard_error = 0.0;
};

Sample Summarize(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / v.size();
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double se = v.size() > 1 ? std::sqrt(ss / (v.size() - 1) / v.size()) : 0.0;
  return {mean, se};
}

ElementSet RandomSet(int n, Rng& rng) {
  ElementSet s(n);
  for (int i = 0; i < n; ++i) {
    if (rng.Bernoulli(0.5)) s.Insert(i);
  }
  return s;
}

bool BitIdentical(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

// Collects sub-check outcomes for one criterion.
class Verdict {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      std::printf("  failed: %s\n", what.c_str());
    }
  }
  bool passed() const { return failures_ == 0; }

 private:
  int failures_ = 0;
};

std::string Format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string Format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------------------
// Criteria 1 and 2: the simulation table.

struct TableRow {
  int n;
  std::vector<double> expected;
};

const std::vector<std::string> kTableColumns = {"DG-exact", "DG-noisy", "Random",
                                                "Ours(m=50)", "Ours(m=200)"};

ExperimentResult RunTable(int n, NoiseMode mode, const Options& options) {
  ExperimentSpec spec;
  spec.n = n;
  spec.trials = 1000;
  spec.h = 20;
  spec.t = 4;
  spec.ms = {50, 200};
  spec.sigma2 = 0.1;
  spec.weight_hi = 20.0;
  spec.master_seed = 1;
  spec.workers = options.workers;
  spec.noise_mode = mode;
  return RunExperiment(spec);
}

bool CheckTable(const TableRow& row, const Options& options) {
  Verdict verdict;
  const ExperimentResult persistent = RunTable(row.n, NoiseMode::kPersistent, options);
  std::printf("  n=%d, 1000 trials, persistent noise (one multiplier per set):\n",
              row.n);
  for (size_t i = 0; i < kTableColumns.size(); ++i) {
    const AlgorithmSummary& s = persistent.summary[i];
    const double diff = s.mean - row.expected[i];
    const bool ok = std::abs(diff) <= 0.03;
    std::printf("    %-12s mean %.3f (std %.3f)  expected %.3f  diff %+.3f  %s\n",
                s.algorithm.c_str(), s.mean, s.stddev, row.expected[i], diff,
                ok ? "ok" : "outside +-0.03");
    verdict.Expect(ok, s.algorithm + " outside tolerance");
  }
  // Diagnostic only: the same experiment with a new multiplier per query.
  const ExperimentResult fresh = RunTable(row.n, NoiseMode::kFresh, options);
  std::printf("  diagnostic, fresh noise (new multiplier per query):\n");
  for (size_t i = 0; i < kTableColumns.size(); ++i) {
    const AlgorithmSummary& s = fresh.summary[i];
    std::printf("    %-12s mean %.3f (std %.3f)  expected %.3f  diff %+.3f\n",
                s.algorithm.c_str(), s.mean, s.stddev, row.expected[i],
                s.mean - row.expected[i]);
  }
  return verdict.passed();
}

bool Criterion1(const Options& o) {
  return CheckTable({50, {0.944, 0.601, 0.550, 0.674, 0.735}}, o);
}

bool Criterion2(const Options& o) {
  return CheckTable({100, {0.944, 0.565, 0.536, 0.657, 0.731}}, o);
}

// ---------------------------------------------------------------------------
// Criteria 3 and 4: double greedy with exact and adversarially perturbed
// values.

struct SubmodularInstance {
  std::string family;
  SetFunctionSpec spec;
  Optimum opt;
};

std::vector<SubmodularInstance> DoubleGreedyInstances() {
  Rng rng(DeriveSeed(3, "double-greedy-instances"));
  std::vector<SubmodularInstance> out;
  for (int i = 0; i < 30; ++i) {
    const int n = 8 + static_cast<int>(rng.UniformInt(5));
    SubmodularInstance inst;
    switch (i % 3) {
      case 0:
        inst.family = "cut";
        inst.spec = RandomCut(n, 0.5, rng);
        break;
      case 1:
        inst.family = "coverage";
        inst.spec = RandomCoverage(n, CoverageParams{}, rng);
        break;
      default:
        inst.family = "additive-quadratic";
        inst.spec = RandomCertifiedWaq(n, 20.0, 10.0 / n, rng);
        break;
    }
    inst.opt = BruteForceOpt(inst.spec);
    out.push_back(std::move(inst));
  }
  return out;
}

bool CheckDoubleGreedy(bool perturbed) {
  Verdict verdict;
  constexpr int kRuns = 2000;
  int index = 0;
  double worst_margin = INFINITY;
  for (const auto& inst : DoubleGreedyInstances()) {
    const int n = GroundSize(inst.spec);
    const double opt = inst.opt.value;
    const double eps = perturbed ? 0.01 * opt : 0.0;
    const ElementSet opt_set = inst.opt.set;
    // Raise sets that disagree with O* on most elements and lower the rest,
    // so every query pushes the algorithm away from the optimum.
    const FunctionOracle oracle(n, [&](const ElementSet& s) {
      const int agreement = n - (s - opt_set).Size() - (opt_set - s).Size();
      const double sign = 2 * agreement >= n ? -1.0 : 1.0;
      return Evaluate(inst.spec, s) + sign * eps;
    });
    Rng rng(DeriveSeed(4, index));
    std::vector<double> values;
    values.reserve(kRuns);
    for (int run = 0; run < kRuns; ++run) {
      values.push_back(Evaluate(inst.spec, RunDoubleGreedy(oracle, rng)));
    }
    const Sample s = Summarize(values);
    const double bound = 0.5 * opt - 1.5 * n * eps - 3 * s.standard_error;
    worst_margin = std::min(worst_margin, opt > 0 ? (s.mean - bound) / opt : 0.0);
    std::printf("    #%02d %-18s n=%2d OPT %8.4f mean %8.4f (se %.4f) bound %8.4f\n",
                index, inst.family.c_str(), n, opt, s.mean, s.standard_error, bound);
    verdict.Expect(s.mean >= bound, Format("instance %d below bound", index));
    ++index;
  }
  std::printf("  smallest (mean - bound) / OPT over instances: %.4f\n", worst_margin);
  return verdict.passed();
}

bool Criterion3(const Options&) { return CheckDoubleGreedy(false); }
bool Criterion4(const Options&) { return CheckDoubleGreedy(true); }

// ---------------------------------------------------------------------------
// Criteria 5 and 6: measured continuous greedy.

bool Criterion5(const Options&) {
  Verdict verdict;
  Rng rng(DeriveSeed(5, "coverage"));
  const Matroid matroid = Matroid::Uniform(10, 3);
  constexpr int kRoundings = 10000;
  for (int i = 0; i < 20; ++i) {
    const SetFunctionSpec spec = RandomCoverage(10, CoverageParams{}, rng);
    const ExactOracle f(spec);
    const double opt = BruteForceOpt(spec, matroid).value;
    const FractionalPoint x =
        RunMeasuredContinuousGreedy(f, matroid, ContinuousGreedyAlgorithm{1.0 / 200},
                                    rng);
    const double fx = MultilinearExact(f, x);
    const double target = (1 - 1 / M_E - 0.03) * opt;
    std::vector<double> rounded;
    rounded.reserve(kRoundings);
    bool feasible = true;
    for (int r = 0; r < kRoundings; ++r) {
      const ElementSet s = PipageRound(matroid, x, rng);
      feasible = feasible && matroid.IsIndependent(s);
      rounded.push_back(f.Value(s));
    }
    const Sample s = Summarize(rounded);
    std::printf("    #%02d OPT %7.4f F(x) %7.4f (>= %7.4f)  E f(round) %7.4f (se %.4f)\n",
                i, opt, fx, target, s.mean, s.standard_error);
    verdict.Expect(fx >= target, Format("instance %d: F(x(1)) below target", i));
    verdict.Expect(s.mean >= fx - 3 * s.standard_error,
                   Format("instance %d: rounding lost value", i));
    verdict.Expect(feasible, Format("instance %d: infeasible rounding", i));
  }
  return verdict.passed();
}

bool Criterion6(const Options&) {
  Verdict verdict;
  Rng rng(DeriveSeed(6, "cut"));
  for (int i = 0; i < 20; ++i) {
    const SetFunctionSpec spec = RandomCut(10, 0.5, rng);
    const Matroid matroid =
        RandomPartitionMatroid(10, 2 + static_cast<int>(rng.UniformInt(3)), rng);
    const ExactOracle f(spec);
    const double opt = BruteForceOpt(spec, matroid).value;
    const FractionalPoint x =
        RunMeasuredContinuousGreedy(f, matroid, ContinuousGreedyAlgorithm{1.0 / 200},
                                    rng);
    const double fx = MultilinearExact(f, x);
    const double target = (1 / M_E - 0.05) * opt;
    std::printf("    #%02d rank %d OPT %7.4f F(x) %7.4f (>= %7.4f) ratio %.3f\n", i,
                matroid.Rank(), opt, fx, target, opt > 0 ? fx / opt : 1.0);
    verdict.Expect(fx >= target, Format("instance %d: F(x(1)) below target", i));
    verdict.Expect(matroid.InPolytope(x), Format("instance %d: x outside polytope", i));
  }
  return verdict.passed();
}

// ---------------------------------------------------------------------------
// Criterion 7: the surrogate is submodular.

bool Criterion7(const Options&) {
  Verdict verdict;
  Rng rng(DeriveSeed(7, "surrogate-submodular"));
  for (int i = 0; i < 50; ++i) {
    const int n = 6 + static_cast<int>(rng.UniformInt(7));
    SetFunctionSpec spec;
    std::string family;
    switch (i % 3) {
      case 0:
        spec = RandomCut(n, 0.5, rng);
        family = "cut";
        break;
      case 1:
        spec = RandomCoverage(n, CoverageParams{}, rng);
        family = "coverage";
        break;
      default:
        spec = RandomCertifiedWaq(n, 20.0, 10.0 / n, rng);
        family = "additive-quadratic";
        break;
    }
    const int h = 1 + static_cast<int>(rng.UniformInt(n - 1));
    const int t = static_cast<int>(rng.UniformInt(h));
    const ElementSet h_set = SampleRandomSubset(GroundSet(n), h, rng);
    const ExactOracle f(spec);
    const CheckReport report = CheckSurrogateSubmodular(f, h_set, t);
    std::printf("    #%02d %-18s n=%2d h=%2d t=%2d  %llu cases, worst slack %.3g\n", i,
                family.c_str(), n, h, t,
                static_cast<unsigned long long>(report.cases), report.worst_slack);
    verdict.Expect(report.passed(), Format("configuration %d not submodular", i));
  }
  return verdict.passed();
}

// ---------------------------------------------------------------------------
// Criterion 8: concentration of the sampled surrogate.

bool Criterion8(const Options&) {
  Verdict verdict;
  constexpr int kN = 30;
  constexpr int kWorlds = 200;
  constexpr int kQueries = 50;
  constexpr double kDelta = 0.1;
  const NoiseSpec noise{GaussianNoise{0.1}, false};
  Rng gen(DeriveSeed(8, "instance"));
  const Coverage coverage = RandomCoverage(kN, CoverageParams{}, gen);
  double f_max = 0.0;
  for (double w : coverage.item_weights) f_max += w;
  const double eps = 0.25 * f_max;
  const SurrogateParameters params =
      ComputeParameters(ParamBudget{eps, kDelta, f_max, noise}, kN);
  // The bound's h = t^2 exceeds n here; keep t and take the smallest h
  // with C(h, t) >= m.
  const int t = params.t;
  int h = t + 1;
  while (Binomial(h, t) < params.m) ++h;
  std::printf("  n=%d f_max=%.4f eps=%.4f delta=%.2f: m=%llu t=%d (bound h=%d, used h=%d,"
              " C(h,t)=%llu)\n",
              kN, f_max, eps, kDelta, static_cast<unsigned long long>(params.m), t,
              params.h, h, static_cast<unsigned long long>(Binomial(h, t)));
  verdict.Expect(h <= kN, "no feasible smoothing set size");
  const int m = static_cast<int>(params.m);
  const ExactOracle exact_f(coverage);
  int failures = 0;
  double worst = 0.0;
  for (int world = 0; world < kWorlds; ++world) {
    const uint64_t seed = DeriveSeed(8, world);
    const PersistentNoisyOracle oracle(coverage, noise, seed);
    Rng rng(DeriveSeed(seed, "surrogate"));
    const ElementSet h_set = SampleRandomSubset(GroundSet(kN), h, rng);
    const SurrogateConfig config = SurrogateConfig::Sample(h_set, t, m, rng);
    const ExactSurrogateOracle exact(exact_f, h_set, t);
    double max_dev = 0.0;
    for (int q = 0; q < kQueries; ++q) {
      // The guarantee quantifies over S disjoint from H.
      const ElementSet s = RandomSet(kN, rng) - h_set;
      max_dev = std::max(max_dev,
                         std::abs(SurrogateSampled(oracle, config, s) - exact.Value(s)));
    }
    worst = std::max(worst, max_dev);
    if (max_dev > eps) ++failures;
  }
  const double rate = static_cast<double>(failures) / kWorlds;
  std::printf("  failures %d / %d (rate %.3f, allowed %.3f); largest deviation %.4f"
              " = %.3f eps\n",
              failures, kWorlds, rate, kDelta, worst, worst / eps);
  verdict.Expect(rate <= kDelta, "failure rate above delta");
  return verdict.passed();
}

// ---------------------------------------------------------------------------
// Criterion 9: the smoothing lemma.

bool Criterion9(const Options&) {
  Verdict verdict;
  Rng rng(DeriveSeed(9, "smoothing"));
  struct Shape {
    int n, rank, h, t;
  };
  const std::vector<Shape> shapes = {
      {12, 10, 2, 0}, {12, 11, 3, 1}, {11, 8, 2, 1}, {12, 9, 2, 1}, {10, 8, 3, 1}};
  for (const Shape& shape : shapes) {
    for (int rep = 0; rep < 2; ++rep) {
      const ExactOracle coverage(RandomCoverage(shape.n, CoverageParams{}, rng));
      const ExactOracle cut(RandomCut(shape.n, 0.4, rng));
      const CheckReport mono =
          CheckSmoothingLemma(coverage, shape.rank, shape.h, shape.t, true, 1e-9);
      const CheckReport non =
          CheckSmoothingLemma(cut, shape.rank, shape.h, shape.t, false, 1e-9);
      for (const CheckReport* r : {&mono, &non}) {
        std::printf("    n=%2d r=%2d h=%d t=%d %-28s %s worst slack %.4g\n", shape.n,
                    shape.rank, shape.h, shape.t, r->name.c_str(),
                    r->passed() ? "ok  " : "FAIL", r->worst_slack);
        verdict.Expect(r->passed(), r->name);
      }
    }
  }
  return verdict.passed();
}

// ---------------------------------------------------------------------------
// Criterion 10: removal, addition and surrogate lemmas.

bool Criterion10(const Options&) {
  Verdict verdict;
  Rng rng(DeriveSeed(10, "lemmas"));
  for (int n : {8, 10}) {
    const std::vector<std::pair<std::string, SetFunctionSpec>> specs = {
        {"coverage", RandomCoverage(n, CoverageParams{}, rng)},
        {"cut", RandomCut(n, 0.4, rng)},
        {"additive-quadratic", RandomCertifiedWaq(n, 20.0, 10.0 / n, rng)},
    };
    for (const auto& [family, spec] : specs) {
      const ExactOracle f(spec);
      const std::vector<CheckReport> reports = {
          CheckRemoveOneElement(f),
          CheckRemoveElements(f, 3),
          CheckAddElements(f, 3),
          CheckSurrogateRemoveSmoothingSet(f, 3, 2),
          CheckSurrogateVersusFunction(f, 3, 2),
      };
      for (const auto& r : reports) {
        std::printf("    n=%2d %-18s %-34s %10llu cases  %s  worst slack %.4g\n", n,
                    family.c_str(), r.name.c_str(),
                    static_cast<unsigned long long>(r.cases),
                    r.passed() ? "ok  " : "FAIL", r.worst_slack);
        verdict.Expect(r.passed(), family + " " + r.name);
      }
    }
  }
  return verdict.passed();
}

// ---------------------------------------------------------------------------
// Criterion 11: noise oracle properties.

bool Criterion11(const Options&) {
  Verdict verdict;
  const SetFunctionSpec modular = Modular{std::vector<double>(16, 1.0)};
  const NoiseSpec gaussian{GaussianNoise{0.1}, false};

  {  // Persistence, including concurrent readers.
    const PersistentNoisyOracle oracle(modular, gaussian, 11);
    Rng rng(1);
    std::vector<ElementSet> sets;
    std::vector<double> first;
    for (int i = 0; i < 1000; ++i) {
      sets.push_back(RandomSet(16, rng));
      first.push_back(oracle.Value(sets.back()));
    }
    std::vector<int> mismatches(4, 0);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        for (size_t i = 0; i < sets.size(); ++i) {
          if (!BitIdentical(oracle.Value(sets[i]), first[i])) ++mismatches[t];
        }
      });
    }
    for (auto& th : threads) th.join();
    int total = 0;
    for (int m : mismatches) total += m;
    std::printf("  persistence: 1000 sets x 4 threads, %d mismatches\n", total);
    verdict.Expect(total == 0, "persistence");
  }
  {  // Unbiasedness over noise worlds.
    const ElementSet s = ElementSet::Of(16, {0, 3, 7, 9});
    const double f = Evaluate(modular, s);
    constexpr int kSeeds = 100000;
    double sum = 0.0;
    for (int seed = 0; seed < kSeeds; ++seed) {
      sum += PersistentNoisyOracle(modular, gaussian, DeriveSeed(110, seed)).Value(s);
    }
    const double mean = sum / kSeeds;
    const double tol = 3 * std::sqrt(0.1) * f / std::sqrt(kSeeds);
    std::printf("  unbiasedness: mean %.5f vs f(S) %.5f (tolerance %.5f)\n", mean, f, tol);
    verdict.Expect(std::abs(mean - f) <= tol, "unbiasedness");
  }
  {  // Distribution means and support.
    constexpr int kDraws = 1000000;
    CounterStream stream(111, Uint128{});
    double g = 0.0;
    for (int i = 0; i < kDraws; ++i) g += SampleMultiplier(gaussian, stream);
    std::printf("  gaussian mean over 1e6 draws: %.5f\n", g / kDraws);
    verdict.Expect(std::abs(g / kDraws - 1.0) <= 0.002, "gaussian mean");

    const NoiseSpec expo{ShiftedExponentialNoise{2.0}, false};
    double e = 0.0, e2 = 0.0;
    for (int i = 0; i < kDraws; ++i) {
      const double xi = SampleMultiplier(expo, stream);
      e += xi;
      e2 += xi * xi;
    }
    const double emean = e / kDraws;
    const double ese = std::sqrt((e2 / kDraws - emean * emean) / kDraws);
    std::printf("  shifted exponential mean over 1e6 draws: %.5f (se %.5f)\n", emean, ese);
    verdict.Expect(std::abs(emean - 1.0) <= 3 * ese, "shifted exponential mean");

    const NoiseSpec uniform{BoundedUniformNoise{0.5}, false};
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i < kDraws; ++i) {
      const double xi = SampleMultiplier(uniform, stream);
      lo = std::min(lo, xi);
      hi = std::max(hi, xi);
    }
    std::printf("  bounded uniform a=0.5 range: [%.5f, %.5f]\n", lo, hi);
    verdict.Expect(lo >= 0.5 && hi <= 1.5, "bounded uniform support");

    const PersistentNoisyOracle exact(modular, NoiselessSpec(), 5);
    Rng rng(2);
    bool identical = true;
    for (int i = 0; i < 1000; ++i) {
      const ElementSet s = RandomSet(16, rng);
      identical = identical && exact.Value(s) == Evaluate(modular, s);
    }
    verdict.Expect(identical, "zero-width noise returns f exactly");
  }
  {  // Independence proxy.
    const PersistentNoisyOracle oracle(modular, gaussian, 12);
    Rng rng(3);
    constexpr int kPairs = 10000;
    double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
    int pairs = 0;
    while (pairs < kPairs) {
      const ElementSet a = RandomSet(16, rng);
      const ElementSet b = RandomSet(16, rng);
      if (a == b) continue;
      const double x = oracle.Multiplier(a);
      const double y = oracle.Multiplier(b);
      sa += x, sb += y, saa += x * x, sbb += y * y, sab += x * y;
      ++pairs;
    }
    const double cov = sab / kPairs - sa / kPairs * sb / kPairs;
    const double corr = cov / std::sqrt((saa / kPairs - sa / kPairs * sa / kPairs) *
                                        (sbb / kPairs - sb / kPairs * sb / kPairs));
    std::printf("  correlation over 1e4 distinct pairs: %+.5f (limit %.3f)\n", corr,
                3.0 / std::sqrt(kPairs));
    verdict.Expect(std::abs(corr) <= 3.0 / std::sqrt(kPairs), "independence proxy");
  }
  {  // Tail of sample means against the Hoeffding rate.
    constexpr double kHalfWidth = 0.5;
    constexpr int kPerMean = 16;
    constexpr int kExperiments = 100000;
    const NoiseSpec uniform{BoundedUniformNoise{kHalfWidth}, false};
    std::vector<double> dev;
    dev.reserve(kExperiments);
    for (int e = 0; e < kExperiments; ++e) {
      const PersistentNoisyOracle oracle(modular, uniform, DeriveSeed(113, e));
      double sum = 0.0;
      for (int i = 0; i < kPerMean; ++i) {
        sum += oracle.Multiplier(ElementSet::Of(16, {i}));
      }
      dev.push_back(std::abs(sum / kPerMean - 1.0));
    }
    for (double s : {0.05, 0.1, 0.15, 0.2, 0.25}) {
      int exceed = 0;
      for (double d : dev) exceed += d >= s;
      const double empirical = static_cast<double>(exceed) / kExperiments;
      const double bound =
          2.0 * std::exp(-2.0 * kPerMean * s * s / (4 * kHalfWidth * kHalfWidth));
      std::printf("  tail P(|mean-1| >= %.2f): empirical %.5f, Hoeffding %.5f\n", s,
                  empirical, bound);
      verdict.Expect(empirical <= 4 * bound, Format("tail at %.2f", s));
    }
  }
  return verdict.passed();
}

// ---------------------------------------------------------------------------
// Criterion 12: reproducible CSV output.

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool Criterion12(const Options& options) {
  Verdict verdict;
  ExperimentSpec spec;
  spec.n = 50;
  spec.trials = 200;
  auto csv = [&](int workers) {
    spec.workers = workers;
    std::ostringstream out;
    WriteCsv(spec, RunExperiment(spec), out);
    return out.str();
  };
  const std::string reference = csv(1);
  for (int workers : {1, 2, 4}) {
    const bool same = csv(workers) == reference;
    std::printf("  library, workers=%d: %s\n", workers, same ? "identical" : "DIFFERENT");
    verdict.Expect(same, Format("library output with %d workers", workers));
  }
  if (!options.cli.empty()) {
    const auto dir = std::filesystem::temp_directory_path();
    std::vector<std::string> outputs;
    int run = 0;
    for (int workers : {1, 2, 4, 4}) {
      const auto path = dir / Format("noisysub_acceptance_%d.csv", run++);
      const std::string cmd = Format(
          "\"%s\" simulate --n 50 --trials 200 --seed 1 --workers %d --out \"%s\"",
          options.cli.c_str(), workers, path.string().c_str());
      const int status = std::system(cmd.c_str());
      verdict.Expect(status == 0, "simulate exited with an error");
      outputs.push_back(ReadFile(path));
      std::filesystem::remove(path);
    }
    for (size_t i = 1; i < outputs.size(); ++i) {
      const bool same = outputs[i] == outputs[0];
      std::printf("  cli run %zu vs run 0: %s\n", i, same ? "identical" : "DIFFERENT");
      verdict.Expect(same, "cli output differs between runs");
    }
    verdict.Expect(outputs[0] == reference, "cli output differs from library output");
    std::printf("  cli output %s library output (%zu bytes)\n",
                outputs[0] == reference ? "matches" : "DIFFERS FROM", outputs[0].size());
  }
  return verdict.passed();
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* description;
  std::function<bool(const Options&)> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> criteria = {
      {"simulation table, n=50, persistent noise, within 0.03", Criterion1},
      {"simulation table, n=100, persistent noise, within 0.03", Criterion2},
      {"double greedy reaches half of OPT on 30 instances", Criterion3},
      {"double greedy under a +-eps adversary on 30 instances", Criterion4},
      {"continuous greedy, monotone coverage, uniform matroid", Criterion5},
      {"continuous greedy, cut functions, partition matroid", Criterion6},
      {"surrogate submodular on 50 configurations", Criterion7},
      {"sampled surrogate concentration over 200 noise worlds", Criterion8},
      {"smoothing lemma, monotone and non-monotone bounds", Criterion9},
      {"removal, addition and surrogate lemma suites", Criterion10},
      {"noise persistence, unbiasedness and independence", Criterion11},
      {"simulate output identical across runs and worker counts", Criterion12},
  };
  return criteria;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noisysub acceptance suite"};
  Options options;
  app.add_option("--criterion", options.criterion, "Run one criterion (1-12)")
      ->check(CLI::Range(0, 12));
  app.add_option("--workers", options.workers,
                 "Threads for the simulation criteria (0 = all cores)");
  app.add_option("--cli", options.cli,
                 "Path to the noisysub binary for the end-to-end determinism check");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  const auto& criteria = Criteria();
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (options.criterion != 0 && options.criterion != number) continue;
    std::printf("criterion %d: %s\n", number, criteria[i].description);
    std::fflush(stdout);
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run(options);
    } catch (const std::exception& e) {
      std::printf("  error: %s\n", e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.1f s)\n", ok ? "PASS" : "FAIL", number,
                criteria[i].description, seconds);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
