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

#include "noisysub/lemma_checks.h"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <utility>

#include "noisysub/generators.h"
#include "noisysub/noise.h"
#include "noisysub/random.h"
#include "noisysub/solvers.h"
#include "noisysub/surrogate.h"

namespace noisysub {
namespace {

using Mask = uint64_t;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> Table(const ValueOracle& oracle) {
  if (oracle.ground_size() > kMaxLemmaCheckSize) {
    throw std::invalid_argument("lemma checks need n <= " +
                                std::to_string(kMaxLemmaCheckSize));
  }
  return TabulateValues(oracle);
}

int Pop(Mask m) { return std::popcount(m); }

// All submasks of `mask` with exactly k bits.
std::vector<Mask> KSubmasks(Mask mask, int k) {
  std::vector<Mask> out;
  Mask sub = mask;
  while (true) {
    if (Pop(sub) == k) out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  return out;
}

// Mean over the t-subsets H' of H of f(x | H').
double SurrogateFromTable(const std::vector<double>& f, Mask x,
                          const std::vector<Mask>& t_subsets) {
  double sum = 0.0;
  for (Mask sub : t_subsets) sum += f[x | sub];
  return sum / static_cast<double>(t_subsets.size());
}

}  // namespace

void CheckReport::Record(double slack, double tolerance) {
  if (cases == 0 || slack < worst_slack) worst_slack = slack;
  ++cases;
  if (slack < -tolerance) ++violations;
}

CheckReport CheckRemoveOneElement(const ValueOracle& oracle, double tolerance) {
  const std::vector<double> f = Table(oracle);
  const Mask full = f.size() - 1;
  CheckReport report{"remove-one-element", 0, 0, 0.0};
  for (Mask s = 0; s <= full; ++s) {
    for (Mask a = 1; a <= full; ++a) {
      double total = 0.0;
      for (Mask rest = a & s; rest != 0; rest &= rest - 1) {
        const Mask x = rest & (~rest + 1);
        total += f[s] - f[s & ~x];
      }
      const double mean = total / Pop(a);
      report.Record(f[s] / Pop(a) - mean, tolerance);
    }
  }
  return report;
}

CheckReport CheckRemoveElements(const ValueOracle& oracle, int max_k,
                                double tolerance) {
  const std::vector<double> f = Table(oracle);
  const int n = oracle.ground_size();
  const Mask full = f.size() - 1;
  CheckReport report{"remove-elements", 0, 0, 0.0};
  if (max_k < 1) return report;
  const int k_limit = std::min(max_k, n);
  // best_below[k][T] = max f(S') over S' ⊆ T with |S'| >= |T| - k.
  std::vector<std::vector<double>> best_below(k_limit + 1,
                                              std::vector<double>(f.size()));
  for (Mask t = 0; t <= full; ++t) {
    std::vector<double> by_drop(k_limit + 1, kNegInf);
    Mask sub = t;
    while (true) {
      const int drop = Pop(t) - Pop(sub);
      if (drop <= k_limit) by_drop[drop] = std::max(by_drop[drop], f[sub]);
      if (sub == 0) break;
      sub = (sub - 1) & t;
    }
    double running = kNegInf;
    for (int k = 0; k <= k_limit; ++k) {
      running = std::max(running, by_drop[k]);
      best_below[k][t] = running;
    }
  }
  for (Mask a = 1; a <= full; ++a) {
    const int size_a = Pop(a);
    for (int k = 1; k <= std::min(k_limit, size_a - 1); ++k) {
      const std::vector<Mask> subsets = KSubmasks(a, k);
      const double coef = static_cast<double>(k) / (size_a - k);
      for (Mask s = 0; s <= full; ++s) {
        double mean = 0.0;
        for (Mask b : subsets) mean += f[s & ~b];
        mean /= static_cast<double>(subsets.size());
        const double bound = f[s] - coef * best_below[k][s & a];
        report.Record(mean - bound, tolerance);
      }
    }
  }
  return report;
}

CheckReport CheckAddElements(const ValueOracle& oracle, int max_k,
                             double tolerance) {
  const std::vector<double> f = Table(oracle);
  const int n = oracle.ground_size();
  const Mask full = f.size() - 1;
  CheckReport report{"add-elements", 0, 0, 0.0};
  if (max_k < 1) return report;
  const int k_limit = std::min(max_k, n);
  std::vector<std::vector<Mask>> subsets(k_limit + 1);
  for (Mask a = 1; a <= full; ++a) {
    const int size_a = Pop(a);
    const int k_top = std::min(k_limit, size_a - 1);
    if (k_top < 1) continue;
    for (int k = 1; k <= k_top; ++k) subsets[k] = KSubmasks(a, k);
    for (Mask s = 0; s <= full; ++s) {
      // max f(S') over S ⊆ S' ⊆ S ∪ A.
      const Mask extra = a & ~s;
      double best = kNegInf;
      Mask d = extra;
      while (true) {
        best = std::max(best, f[s | d]);
        if (d == 0) break;
        d = (d - 1) & extra;
      }
      for (int k = 1; k <= k_top; ++k) {
        double mean = 0.0;
        for (Mask b : subsets[k]) mean += f[s | b];
        mean /= static_cast<double>(subsets[k].size());
        const double coef = static_cast<double>(k) / (size_a - k);
        report.Record(mean - (f[s] - coef * best), tolerance);
      }
    }
  }
  return report;
}

namespace {

// Runs `visit(h, t, s, mean_removed, mean_kept)` for every S and (h, t) in
// range, where the means are E_H F^{H,t}(S \ H) and E_H F^{H,t}(S).
template <class Visit>
void ForEachSurrogateExpectation(const std::vector<double>& f, int n, int max_h,
                                 int max_t, Visit&& visit) {
  const Mask full = f.size() - 1;
  for (int h = 1; h <= std::min(max_h, n - 1); ++h) {
    const std::vector<Mask> hs = KSubmasks(full, h);
    for (int t = 0; t <= std::min(max_t, h - 1); ++t) {
      std::vector<std::vector<Mask>> t_subsets;
      t_subsets.reserve(hs.size());
      for (Mask hm : hs) t_subsets.push_back(KSubmasks(hm, t));
      for (Mask s = 0; s <= full; ++s) {
        double removed = 0.0;
        double kept = 0.0;
        for (size_t j = 0; j < hs.size(); ++j) {
          removed += SurrogateFromTable(f, s & ~hs[j], t_subsets[j]);
          kept += SurrogateFromTable(f, s, t_subsets[j]);
        }
        const double count = static_cast<double>(hs.size());
        visit(h, t, s, removed / count, kept / count);
      }
    }
  }
}

}  // namespace

CheckReport CheckSurrogateRemoveSmoothingSet(const ValueOracle& oracle, int max_h,
                                             int max_t, double tolerance) {
  const std::vector<double> f = Table(oracle);
  const int n = oracle.ground_size();
  // best_upto[k] = max f(S') over |S'| <= k.
  std::vector<double> best_upto(n + 1, kNegInf);
  for (Mask s = 0; s < f.size(); ++s) {
    best_upto[Pop(s)] = std::max(best_upto[Pop(s)], f[s]);
  }
  for (int k = 1; k <= n; ++k) best_upto[k] = std::max(best_upto[k], best_upto[k - 1]);
  CheckReport report{"surrogate-remove-smoothing-set", 0, 0, 0.0};
  ForEachSurrogateExpectation(
      f, n, max_h, max_t, [&](int h, int, Mask s, double removed, double kept) {
        const double coef = static_cast<double>(h) / (n - h);
        const double cap = best_upto[std::min(n, Pop(s) + h)];
        report.Record(removed - (kept - coef * cap), tolerance);
      });
  return report;
}

CheckReport CheckSurrogateVersusFunction(const ValueOracle& oracle, int max_h,
                                         int max_t, double tolerance) {
  const std::vector<double> f = Table(oracle);
  const int n = oracle.ground_size();
  const Mask full = f.size() - 1;
  CheckReport report{"surrogate-versus-function", 0, 0, 0.0};
  ForEachSurrogateExpectation(
      f, n, max_h, max_t, [&](int h, int, Mask s, double, double kept) {
        const Mask outside = full & ~s;
        double best = kNegInf;
        Mask d = outside;
        while (true) {
          if (Pop(d) <= h) best = std::max(best, f[s | d]);
          if (d == 0) break;
          d = (d - 1) & outside;
        }
        const double coef = static_cast<double>(h) / (n - h);
        report.Record(kept - (f[s] - coef * best), tolerance);
      });
  return report;
}

CheckReport CheckSmoothingLemma(const ValueOracle& oracle, int rank, int h, int t,
                                bool monotone, double tolerance) {
  const std::vector<double> f = Table(oracle);
  const int n = oracle.ground_size();
  if (!(0 <= t && t < h && h < rank && rank <= n)) {
    throw std::invalid_argument("smoothing check needs 0 <= t < h < rank <= n");
  }
  const Mask full = f.size() - 1;
  const Mask basis = Matroid::Uniform(n, rank).ArbitraryBasis().LowMask();
  double opt = kNegInf;
  for (Mask s = 0; s <= full; ++s) {
    if (Pop(s) <= rank) opt = std::max(opt, f[s]);
  }
  const std::vector<Mask> hs = KSubmasks(basis, h);
  double expectation = 0.0;
  for (Mask hm : hs) {
    const std::vector<Mask> t_subsets = KSubmasks(hm, t);
    const Mask allowed = full & ~hm;
    double best = kNegInf;
    Mask s = allowed;
    while (true) {
      if (Pop(s) <= rank - h) {
        best = std::max(best, SurrogateFromTable(f, s, t_subsets));
      }
      if (s == 0) break;
      s = (s - 1) & allowed;
    }
    expectation += best;
  }
  expectation /= static_cast<double>(hs.size());
  CheckReport report{"smoothing-lemma", 0, 0, 0.0};
  const double loss_h = static_cast<double>(h) / (rank - h);
  const double loss_t = static_cast<double>(t) / (h - t);
  report.Record(expectation - (1.0 - loss_h - loss_t) * opt, tolerance);
  if (monotone) report.Record(expectation - (1.0 - loss_h) * opt, tolerance);
  return report;
}

CheckReport CheckDoubleGreedyMarginalSum(const ValueOracle& oracle,
                                         double tolerance) {
  const std::vector<double> f = Table(oracle);
  const Mask full = f.size() - 1;
  CheckReport report{"double-greedy-marginal-sum", 0, 0, 0.0};
  for (Mask y = 1; y <= full; ++y) {
    for (Mask rest = y; rest != 0; rest &= rest - 1) {
      const Mask u = rest & (~rest + 1);
      const Mask y_minus = y & ~u;
      const double b = f[y_minus] - f[y];
      Mask x = y_minus;
      while (true) {
        const double a = f[x | u] - f[x];
        report.Record(a + b, tolerance);
        if (x == 0) break;
        x = (x - 1) & y_minus;
      }
    }
  }
  return report;
}

CheckReport CheckSurrogateSubmodular(const ValueOracle& oracle,
                                     const ElementSet& h_set, int t,
                                     double tolerance) {
  const ExactSurrogateOracle surrogate(oracle, h_set, t);
  CheckReport report{"surrogate-submodular", 0, 0, 0.0};
  report.Record(CheckSubmodular(surrogate, tolerance) ? 0.0 : -1.0, tolerance);
  return report;
}

std::vector<CheckReport> RunCheckSuite(uint64_t seed) {
  Rng rng(DeriveSeed(seed, "check-suite"));
  std::vector<CheckReport> reports;
  auto merge = [&](CheckReport r, const std::string& family) {
    r.name += "/" + family;
    for (auto& existing : reports) {
      if (existing.name == r.name) {
        existing.cases += r.cases;
        existing.violations += r.violations;
        existing.worst_slack = std::min(existing.worst_slack, r.worst_slack);
        return;
      }
    }
    reports.push_back(std::move(r));
  };

  constexpr int kInstances = 3;
  constexpr int kN = 8;
  for (int i = 0; i < kInstances; ++i) {
    const std::vector<std::pair<std::string, SetFunctionSpec>> specs = {
        {"coverage", RandomCoverage(kN, CoverageParams{}, rng)},
        {"cut", RandomCut(kN, 0.4, rng)},
        {"additive-quadratic", RandomCertifiedWaq(kN, 20.0, 10.0 / kN, rng)},
    };
    for (const auto& [family, spec] : specs) {
      const ExactOracle oracle(spec);
      CheckReport sub{"submodular", 0, 0, 0.0};
      sub.Record(CheckSubmodular(oracle) ? 0.0 : -1.0, kLemmaTolerance);
      merge(sub, family);
      merge(CheckRemoveOneElement(oracle), family);
      merge(CheckRemoveElements(oracle, 3), family);
      merge(CheckAddElements(oracle, 3), family);
      merge(CheckSurrogateRemoveSmoothingSet(oracle, 3, 2), family);
      merge(CheckSurrogateVersusFunction(oracle, 3, 2), family);
      merge(CheckDoubleGreedyMarginalSum(oracle), family);
      const int h = 2 + static_cast<int>(rng.UniformInt(3));
      const int t = static_cast<int>(rng.UniformInt(h));
      const ElementSet h_set = SampleRandomSubset(GroundSet(kN), h, rng);
      merge(CheckSurrogateSubmodular(oracle, h_set, t), family);
    }
  }

  constexpr int kSmoothingN = 10;
  for (int i = 0; i < kInstances; ++i) {
    const ExactOracle coverage(RandomCoverage(kSmoothingN, CoverageParams{}, rng));
    merge(CheckSmoothingLemma(coverage, 8, 3, 1, /*monotone=*/true), "coverage");
    const ExactOracle cut(RandomCut(kSmoothingN, 0.4, rng));
    merge(CheckSmoothingLemma(cut, 8, 3, 1, /*monotone=*/false), "cut");
  }

  // Persistence of the noisy oracle.
  const PersistentNoisyOracle noisy(RandomCoverage(kN, CoverageParams{}, rng),
                                    NoiseSpec{GaussianNoise{0.1}, false}, seed);
  CheckReport persistence{"persistence", 0, 0, 0.0};
  for (int i = 0; i < 1000; ++i) {
    const ElementSet s = ElementSet::FromMask(kN, rng.UniformInt(uint64_t{1} << kN));
    const double first = noisy.Value(s);
    const double second = noisy.Value(s);
    persistence.Record(std::memcmp(&first, &second, sizeof(double)) == 0 ? 0.0 : -1.0,
                       0.0);
  }
  merge(persistence, "gaussian");
  return reports;
}

}  // namespace noisysub
