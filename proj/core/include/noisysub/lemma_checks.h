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

#ifndef NOISYSUB_LEMMA_CHECKS_H_
#define NOISYSUB_LEMMA_CHECKS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "noisysub/set_function.h"

namespace noisysub {

// Exhaustive verification of the finite inequalities behind the analysis.
// Every check enumerates subsets, so the ground set must be small (n <= 12
// unless noted). Each reports the number of inequality instances examined,
// how many failed by more than `tolerance`, and the smallest observed
// slack (rhs subtracted from lhs, oriented so that >= 0 means satisfied).
struct CheckReport {
  std::string name;
  uint64_t cases = 0;
  uint64_t violations = 0;
  double worst_slack = 0.0;

  bool passed() const { return violations == 0; }
  void Record(double slack, double tolerance);
};

inline constexpr double kLemmaTolerance = 1e-9;
inline constexpr int kMaxLemmaCheckSize = 12;

// For every S and nonempty A:
//   mean_{x in A} [f(S) - f(S - x)] <= f(S) / |A|.
// Needs f >= 0.
CheckReport CheckRemoveOneElement(const ValueOracle& oracle,
                                  double tolerance = kLemmaTolerance);

// For every S, A and 1 <= k <= min(max_k, |A| - 1):
//   E_{B ~ A[k]} f(S \ B) >= f(S) - k / (|A| - k) *
//       max { f(S') : S' ⊆ S ∩ A, |S'| >= |S ∩ A| - k }.
CheckReport CheckRemoveElements(const ValueOracle& oracle, int max_k,
                                double tolerance = kLemmaTolerance);

// For every S, A and 1 <= k <= min(max_k, |A| - 1):
//   E_{B ~ A[k]} f(S ∪ B) >= f(S) - k / (|A| - k) *
//       max { f(S') : S ⊆ S' ⊆ S ∪ A }.
CheckReport CheckAddElements(const ValueOracle& oracle, int max_k,
                             double tolerance = kLemmaTolerance);

// For every S, 1 <= h <= max_h (h < n) and 0 <= t <= min(max_t, h - 1):
//   E_{H ~ N[h]} F^{H,t}(S \ H) >= E_{H ~ N[h]} F^{H,t}(S)
//       - h / (n - h) * max { f(S') : |S'| <= |S| + h }.
CheckReport CheckSurrogateRemoveSmoothingSet(const ValueOracle& oracle, int max_h,
                                             int max_t,
                                             double tolerance = kLemmaTolerance);

// Same ranges:
//   E_{H ~ N[h]} F^{H,t}(S) >= f(S)
//       - h / (n - h) * max { f(S') : S ⊆ S', |S'| <= |S| + h }.
CheckReport CheckSurrogateVersusFunction(const ValueOracle& oracle, int max_h,
                                         int max_t,
                                         double tolerance = kLemmaTolerance);

// With B0 the ascending-id basis of Uniform(n, rank) and O* the best set of
// size <= rank:
//   E_{H ~ B0[h]} max_{S ∈ I_H} F^{H,t}(S)
//       >= (1 - h / (rank - h) - t / (h - t)) * f(O*),
// and, when `monotone` is set, also >= (1 - h / (rank - h)) * f(O*).
// Needs 0 <= t < h < rank.
CheckReport CheckSmoothingLemma(const ValueOracle& oracle, int rank, int h, int t,
                                bool monotone, double tolerance = kLemmaTolerance);

// For every Y, u in Y and X ⊆ Y - u:
//   [f(X + u) - f(X)] + [f(Y - u) - f(Y)] >= 0.
CheckReport CheckDoubleGreedyMarginalSum(const ValueOracle& oracle,
                                         double tolerance = kLemmaTolerance);

// Diminishing returns for the exact surrogate of `oracle` with smoothing set
// H and subset size t. n <= kMaxSubmodularityCheckSize.
CheckReport CheckSurrogateSubmodular(const ValueOracle& oracle,
                                     const ElementSet& h_set, int t,
                                     double tolerance = kLemmaTolerance);

// Runs every check above on a batch of random instances derived from `seed`.
std::vector<CheckReport> RunCheckSuite(uint64_t seed);

}  // namespace noisysub

#endif  // NOISYSUB_LEMMA_CHECKS_H_
