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

#ifndef NOISYSUB_SET_FUNCTION_H_
#define NOISYSUB_SET_FUNCTION_H_

#include <functional>
#include <variant>
#include <vector>

#include "noisysub/element_set.h"
#include "noisysub/matroid.h"

namespace noisysub {

// f(S) = sum_{i in S} w_i - cost * |S|^2.
struct WeightedAdditiveQuadratic {
  std::vector<double> weights;
  double cost = 0.0;
};

// f(S) = total weight of items covered by some element of S.
struct Coverage {
  // covers[e] lists the items covered by element e.
  std::vector<std::vector<int>> covers;
  std::vector<double> item_weights;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

// f(S) = total weight of edges with exactly one endpoint in S.
struct CutFunction {
  int num_vertices = 0;
  std::vector<WeightedEdge> edges;
};

// f(S) = sum_{i in S} w_i.
struct Modular {
  std::vector<double> weights;
};

using SetFunctionSpec =
    std::variant<WeightedAdditiveQuadratic, Coverage, CutFunction, Modular>;

int GroundSize(const SetFunctionSpec& spec);
// Throws std::invalid_argument on malformed specs (empty ground set, item
// indices out of range, negative coverage/cut weights, self loops, ...).
void Validate(const SetFunctionSpec& spec);

double Evaluate(const SetFunctionSpec& spec, const ElementSet& s);
// f(S + x) - f(S). Throws if x is already in S.
double Marginal(const SetFunctionSpec& spec, const ElementSet& s, int x);

// Checks f(S) >= 0 for every S in closed form: because the cost depends only
// on |S|, the minimum over sets of size k is the sum of the k smallest
// weights minus cost * k^2.
bool IsNonNegativeCertified(const WeightedAdditiveQuadratic& f);

// Set-function evaluation interface shared by exact, noisy and surrogate
// oracles. Implementations must be safe for concurrent Value() calls.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;
  virtual int ground_size() const = 0;
  virtual double Value(const ElementSet& s) const = 0;
};

class ExactOracle : public ValueOracle {
 public:
  explicit ExactOracle(SetFunctionSpec spec);

  int ground_size() const override { return n_; }
  double Value(const ElementSet& s) const override { return Evaluate(spec_, s); }
  const SetFunctionSpec& spec() const { return spec_; }

 private:
  SetFunctionSpec spec_;
  int n_;
};

// Adapts an arbitrary callable.
class FunctionOracle : public ValueOracle {
 public:
  FunctionOracle(int n, std::function<double(const ElementSet&)> fn);

  int ground_size() const override { return n_; }
  double Value(const ElementSet& s) const override;

 private:
  int n_;
  std::function<double(const ElementSet&)> fn_;
};

// Largest n accepted by the enumeration-based routines below.
inline constexpr int kMaxBruteForceSize = 24;
inline constexpr int kMaxSubmodularityCheckSize = 14;

// All 2^n values, indexed by membership mask. n <= kMaxBruteForceSize.
std::vector<double> TabulateValues(const ValueOracle& oracle);

struct Optimum {
  ElementSet set;
  double value = 0.0;
};

// Exhaustive maximization. Ties go to the set with the smallest membership
// mask. n <= kMaxBruteForceSize.
Optimum BruteForceOpt(const ValueOracle& oracle);
Optimum BruteForceOpt(const ValueOracle& oracle, const Matroid& feasible);
Optimum BruteForceOpt(const SetFunctionSpec& spec);
Optimum BruteForceOpt(const SetFunctionSpec& spec, const Matroid& feasible);

// True iff f_A(x) >= f_B(x) - tolerance for all A ⊆ B and x ∉ B.
// n <= kMaxSubmodularityCheckSize.
bool CheckSubmodular(const ValueOracle& oracle, double tolerance = 1e-9);
bool CheckSubmodular(const SetFunctionSpec& spec, double tolerance = 1e-9);

// True iff f(A) <= f(B) + tolerance for all A ⊆ B. n <= kMaxBruteForceSize.
bool CheckMonotone(const ValueOracle& oracle, double tolerance = 1e-9);

}  // namespace noisysub

#endif  // NOISYSUB_SET_FUNCTION_H_
