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

#include "noisysub/surrogate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace noisysub {
namespace {

constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();

ElementSet SubsetFromPositions(const std::vector<int>& members,
                               const std::vector<int>& positions, int n) {
  ElementSet out(n);
  for (int p : positions) out.Insert(members[p]);
  return out;
}

// Floyd's algorithm: a uniform k-subset of {0, ..., n-1}.
std::vector<int> RandomPositions(int n, int k, Rng& rng) {
  std::vector<int> chosen;
  chosen.reserve(k);
  std::vector<char> taken(n, 0);
  for (int j = n - k; j < n; ++j) {
    const int r = static_cast<int>(rng.UniformInt(static_cast<uint64_t>(j) + 1));
    const int pick = taken[r] ? j : r;
    taken[pick] = 1;
    chosen.push_back(pick);
  }
  return chosen;
}

void CheckShape(const ElementSet& h_set, int t) {
  const int h = h_set.Size();
  const bool degenerate = (h == 0 && t == 0);
  if (!degenerate && !(t >= 0 && t < h)) {
    throw std::invalid_argument("surrogate needs 0 <= t < h (or h = t = 0), got h=" +
                                std::to_string(h) + " t=" + std::to_string(t));
  }
}

}  // namespace

uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __uint128_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<uint64_t>(result);
}

std::vector<int> UnrankCombination(int n, int k, uint64_t rank) {
  const uint64_t total = Binomial(n, k);
  if (total == 0 || total == kSaturated || rank >= total) {
    throw std::out_of_range("combination rank out of range");
  }
  std::vector<int> out;
  out.reserve(k);
  int next = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int c = next;; ++c) {
      const uint64_t count = Binomial(n - c - 1, k - pos - 1);
      if (rank < count) {
        out.push_back(c);
        next = c + 1;
        break;
      }
      rank -= count;
    }
  }
  return out;
}

std::vector<ElementSet> AllTSubsets(const ElementSet& h_set, int t) {
  const std::vector<int> members = h_set.Elements();
  const int h = static_cast<int>(members.size());
  if (t < 0 || t > h) throw std::invalid_argument("t must be in [0, |H|]");
  const uint64_t total = Binomial(h, t);
  if (total > (uint64_t{1} << 32)) {
    throw std::invalid_argument("too many t-subsets to enumerate");
  }
  std::vector<ElementSet> out;
  out.reserve(total);
  // Walk combinations in lexicographic order without unranking each one.
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(SubsetFromPositions(members, idx, h_set.ground_size()));
    int i = t - 1;
    while (i >= 0 && idx[i] == h - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<ElementSet> SampleTSubsetsWithoutReplacement(const ElementSet& h_set,
                                                         int t, int m, Rng& rng) {
  const std::vector<int> members = h_set.Elements();
  const int h = static_cast<int>(members.size());
  if (t < 0 || t > h) throw std::invalid_argument("t must be in [0, |H|]");
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  const uint64_t total = Binomial(h, t);
  if (static_cast<uint64_t>(m) > total) {
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds C(" +
                                std::to_string(h) + ", " + std::to_string(t) +
                                ") = " + std::to_string(total));
  }
  const int n = h_set.ground_size();
  std::vector<ElementSet> out;
  out.reserve(m);
  if (total <= 4 * static_cast<uint64_t>(m)) {
    std::vector<uint64_t> ranks(total);
    std::iota(ranks.begin(), ranks.end(), uint64_t{0});
    for (int i = 0; i < m; ++i) {
      const uint64_t j = i + rng.UniformInt(total - i);
      std::swap(ranks[i], ranks[j]);
      out.push_back(
          SubsetFromPositions(members, UnrankCombination(h, t, ranks[i]), n));
    }
    return out;
  }
  std::unordered_set<ElementSet, ElementSetHash> seen;
  seen.reserve(2 * static_cast<size_t>(m));
  while (static_cast<int>(out.size()) < m) {
    ElementSet candidate = SubsetFromPositions(members, RandomPositions(h, t, rng), n);
    if (seen.insert(candidate).second) out.push_back(candidate);
  }
  return out;
}

SurrogateConfig::SurrogateConfig(ElementSet h_set, int t,
                                 std::vector<ElementSet> samples)
    : h_set_(std::move(h_set)), t_(t), samples_(std::move(samples)) {}

SurrogateConfig SurrogateConfig::Sample(const ElementSet& smoothing_set, int t,
                                        int m, Rng& rng) {
  CheckShape(smoothing_set, t);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  return SurrogateConfig(smoothing_set, t,
                         SampleTSubsetsWithoutReplacement(smoothing_set, t, m, rng));
}

SurrogateConfig SurrogateConfig::FromSamples(const ElementSet& smoothing_set,
                                             int t,
                                             std::vector<ElementSet> samples) {
  CheckShape(smoothing_set, t);
  if (samples.empty()) throw std::invalid_argument("m must be >= 1");
  if (samples.size() > Binomial(smoothing_set.Size(), t)) {
    throw std::invalid_argument("more samples than t-subsets of H");
  }
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (const ElementSet& s : samples) {
    if (s.ground_size() != smoothing_set.ground_size() ||
        !s.IsSubsetOf(smoothing_set) || s.Size() != t) {
      throw std::invalid_argument("sample " + s.ToString() +
                                  " is not a t-subset of H");
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument("duplicate sample " + s.ToString());
    }
  }
  return SurrogateConfig(smoothing_set, t, std::move(samples));
}

SurrogateConfig SurrogateConfig::Identity(int n) {
  ElementSet empty{GroundSet(n)};
  return SurrogateConfig(empty, 0, {empty});
}

double SurrogateExact(const ValueOracle& oracle, const ElementSet& h_set, int t,
                      const ElementSet& s) {
  CheckShape(h_set, t);
  if (h_set.Size() > kMaxExactSurrogateSize) {
    throw std::invalid_argument("exact surrogate limited to |H| <= " +
                                std::to_string(kMaxExactSurrogateSize));
  }
  const std::vector<ElementSet> subsets = AllTSubsets(h_set, t);
  double sum = 0.0;
  for (const ElementSet& sub : subsets) sum += oracle.Value(s | sub);
  return sum / static_cast<double>(subsets.size());
}

double SurrogateExact(const SetFunctionSpec& spec, const ElementSet& h_set,
                      int t, const ElementSet& s) {
  return SurrogateExact(ExactOracle(spec), h_set, t, s);
}

double SurrogateSampled(const ValueOracle& oracle, const SurrogateConfig& config,
                        const ElementSet& s) {
  if (s.ground_size() != oracle.ground_size() ||
      config.smoothing_set().ground_size() != oracle.ground_size()) {
    throw std::invalid_argument("surrogate ground size mismatch");
  }
  double sum = 0.0;
  for (const ElementSet& sub : config.samples()) sum += oracle.Value(s | sub);
  return sum / config.m();
}

SampledSurrogateOracle::SampledSurrogateOracle(const ValueOracle& oracle,
                                               SurrogateConfig config)
    : oracle_(oracle), config_(std::move(config)) {
  if (config_.smoothing_set().ground_size() != oracle_.ground_size()) {
    throw std::invalid_argument("surrogate ground size mismatch");
  }
}

double SampledSurrogateOracle::Value(const ElementSet& s) const {
  return SurrogateSampled(oracle_, config_, s);
}

ExactSurrogateOracle::ExactSurrogateOracle(const ValueOracle& oracle,
                                           const ElementSet& h_set, int t)
    : oracle_(oracle) {
  if (h_set.ground_size() != oracle.ground_size()) {
    throw std::invalid_argument("surrogate ground size mismatch");
  }
  if (h_set.Size() > kMaxExactSurrogateSize) {
    throw std::invalid_argument("exact surrogate limited to |H| <= " +
                                std::to_string(kMaxExactSurrogateSize));
  }
  subsets_ = AllTSubsets(h_set, t);
}

double ExactSurrogateOracle::Value(const ElementSet& s) const {
  double sum = 0.0;
  for (const ElementSet& sub : subsets_) sum += oracle_.Value(s | sub);
  return sum / static_cast<double>(subsets_.size());
}

SurrogateParameters ComputeParameters(const ParamBudget& budget, int n,
                                      std::optional<int> rank) {
  Validate(budget.noise);
  return ComputeParameters(budget.epsilon, budget.delta, budget.f_max,
                           SubExponential(budget.noise), n, rank);
}

SurrogateParameters ComputeParameters(double epsilon, double delta, double f_max,
                                      const SubExponentialParams& se, int n,
                                      std::optional<int> rank) {
  GroundSet ground(n);
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
  if (!(f_max > 0.0) || !std::isfinite(f_max)) {
    throw std::invalid_argument("f_max must be positive");
  }
  if (!(se.nu >= 0.0) || !(se.alpha >= 0.0)) {
    throw std::invalid_argument("nu and alpha must be >= 0");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (se.alpha > 0.0 && epsilon > 2.0 * se.nu * se.nu * f_max / se.alpha) {
    throw std::invalid_argument(
        "epsilon exceeds the valid range 2 nu^2 f_max / alpha");
  }
  const double lead = std::max(2.0, 8.0 * se.nu * se.nu);
  const double ratio = f_max / epsilon;
  const double bound =
      lead * ratio * ratio * (ground.size() + std::log(4.0 / delta));
  // Absorb rounding noise so exact integers are not pushed up by one.
  const double m_real = std::ceil(bound - 1e-9 * std::max(1.0, bound));
  if (!(m_real < 0x1p62)) {
    throw std::invalid_argument("sample count overflows; epsilon too small");
  }
  SurrogateParameters out;
  out.m = static_cast<uint64_t>(m_real);
  int t = 0;
  while ((uint64_t{1} << t) < 4 * out.m) ++t;
  out.t = t;
  out.h = t * t;
  out.h_within_ground = out.h <= n;
  if (rank.has_value()) out.h_within_rank = out.h <= *rank;
  return out;
}

}  // namespace noisysub
