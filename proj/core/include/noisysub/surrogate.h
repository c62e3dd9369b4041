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

#ifndef NOISYSUB_SURROGATE_H_
#define NOISYSUB_SURROGATE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "noisysub/element_set.h"
#include "noisysub/noise.h"
#include "noisysub/random.h"
#include "noisysub/set_function.h"

namespace noisysub {

// C(n, k), saturating at UINT64_MAX. Returns 0 when k < 0 or k > n.
uint64_t Binomial(int n, int k);

// The rank-th k-subset of {0, ..., n-1} in lexicographic order, as sorted
// indices. rank < C(n, k).
std::vector<int> UnrankCombination(int n, int k, uint64_t rank);

// m pairwise distinct t-subsets of H, each uniformly distributed and jointly
// uniform over m-subsets of H[t]. Throws when m > C(|H|, t).
std::vector<ElementSet> SampleTSubsetsWithoutReplacement(const ElementSet& h_set,
                                                         int t, int m, Rng& rng);

// Every t-subset of H, in lexicographic order of their positions in H.
std::vector<ElementSet> AllTSubsets(const ElementSet& h_set, int t);

// The smoothing set H together with the m frozen t-subsets H_1..H_m.
class SurrogateConfig {
 public:
  static SurrogateConfig Sample(const ElementSet& smoothing_set, int t, int m,
                                Rng& rng);
  // Validates the given subsets (distinct, size t, inside H).
  static SurrogateConfig FromSamples(const ElementSet& smoothing_set, int t,
                                     std::vector<ElementSet> samples);
  // h = t = 0, m = 1: the surrogate is the oracle itself.
  static SurrogateConfig Identity(int n);

  const ElementSet& smoothing_set() const { return h_set_; }
  int h() const { return h_set_.Size(); }
  int t() const { return t_; }
  int m() const { return static_cast<int>(samples_.size()); }
  const std::vector<ElementSet>& samples() const { return samples_; }

 private:
  SurrogateConfig(ElementSet h_set, int t, std::vector<ElementSet> samples);

  ElementSet h_set_;
  int t_;
  std::vector<ElementSet> samples_;
};

inline constexpr int kMaxExactSurrogateSize = 24;

// Average of f(S ∪ H') over every t-subset H' of H. |H| <= 24.
double SurrogateExact(const ValueOracle& oracle, const ElementSet& h_set, int t,
                      const ElementSet& s);
double SurrogateExact(const SetFunctionSpec& spec, const ElementSet& h_set,
                      int t, const ElementSet& s);

// (1/m) * sum_i oracle(S ∪ H_i) over the frozen subsets of `config`.
double SurrogateSampled(const ValueOracle& oracle, const SurrogateConfig& config,
                        const ElementSet& s);

// The sampled surrogate as an oracle. Holds a reference to `oracle`, which
// must outlive this object.
class SampledSurrogateOracle : public ValueOracle {
 public:
  SampledSurrogateOracle(const ValueOracle& oracle, SurrogateConfig config);

  int ground_size() const override { return oracle_.ground_size(); }
  double Value(const ElementSet& s) const override;
  const SurrogateConfig& config() const { return config_; }

 private:
  const ValueOracle& oracle_;
  SurrogateConfig config_;
};

// The exact surrogate as an oracle. Holds a reference to `oracle`.
class ExactSurrogateOracle : public ValueOracle {
 public:
  // Keeps a reference to `oracle`, which must outlive this object.
  ExactSurrogateOracle(const ValueOracle& oracle, const ElementSet& h_set,
                       int t);
  ExactSurrogateOracle(const ValueOracle&& oracle, const ElementSet& h_set,
                       int t) = delete;

  int ground_size() const override { return oracle_.ground_size(); }
  double Value(const ElementSet& s) const override;

 private:
  const ValueOracle& oracle_;
  std::vector<ElementSet> subsets_;
};

struct ParamBudget {
  double epsilon = 1.0;
  double delta = 0.05;
  double f_max = 1.0;
  NoiseSpec noise;
};

struct SurrogateParameters {
  int h = 0;
  int t = 0;
  uint64_t m = 0;
  bool h_within_ground = false;
  // Unset when no rank was supplied.
  std::optional<bool> h_within_rank;
};

// Smallest integers with
//   m >= max{2, 8 nu^2} * f_max^2 / eps^2 * (n + ln(4 / delta)),
//   t >= log2(4 m),  h = t^2.
// Throws std::invalid_argument if eps is not in (0, 2 nu^2 f_max / alpha]
// (the upper limit only applies when alpha > 0), delta is not in (0, 1) or
// f_max <= 0.
SurrogateParameters ComputeParameters(const ParamBudget& budget, int n,
                                      std::optional<int> rank = std::nullopt);
// Same, with the noise given only through its sub-exponential parameters.
SurrogateParameters ComputeParameters(double epsilon, double delta, double f_max,
                                      const SubExponentialParams& noise, int n,
                                      std::optional<int> rank = std::nullopt);

}  // namespace noisysub

#endif  // NOISYSUB_SURROGATE_H_
