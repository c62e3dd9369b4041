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

#include "noisysub/set_function.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace noisysub {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void CheckFinite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void CheckEnumerable(int n, int limit, const char* op) {
  if (n > limit) {
    throw std::invalid_argument(std::string(op) + ": ground size " +
                                std::to_string(n) + " exceeds limit " +
                                std::to_string(limit));
  }
}

double EvaluateWaq(const WeightedAdditiveQuadratic& f, const ElementSet& s) {
  double sum = 0.0;
  s.ForEach([&](int e) { sum += f.weights[e]; });
  const double k = s.Size();
  return sum - f.cost * k * k;
}

double EvaluateCoverage(const Coverage& f, const ElementSet& s) {
  std::vector<char> covered(f.item_weights.size(), 0);
  double total = 0.0;
  s.ForEach([&](int e) {
    for (int item : f.covers[e]) {
      if (!covered[item]) {
        covered[item] = 1;
        total += f.item_weights[item];
      }
    }
  });
  return total;
}

double EvaluateCut(const CutFunction& f, const ElementSet& s) {
  double total = 0.0;
  for (const auto& edge : f.edges) {
    if (s.Contains(edge.u) != s.Contains(edge.v)) total += edge.weight;
  }
  return total;
}

double EvaluateModular(const Modular& f, const ElementSet& s) {
  double sum = 0.0;
  s.ForEach([&](int e) { sum += f.weights[e]; });
  return sum;
}

}  // namespace

int GroundSize(const SetFunctionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const WeightedAdditiveQuadratic& f) {
            return static_cast<int>(f.weights.size());
          },
          [](const Coverage& f) { return static_cast<int>(f.covers.size()); },
          [](const CutFunction& f) { return f.num_vertices; },
          [](const Modular& f) { return static_cast<int>(f.weights.size()); },
      },
      spec);
}

void Validate(const SetFunctionSpec& spec) {
  GroundSet ground(GroundSize(spec));
  std::visit(
      Overloaded{
          [](const WeightedAdditiveQuadratic& f) {
            for (double w : f.weights) CheckFinite(w, "weight");
            CheckFinite(f.cost, "cost");
          },
          [](const Coverage& f) {
            for (double w : f.item_weights) {
              CheckFinite(w, "item weight");
              if (w < 0.0) {
                throw std::invalid_argument("coverage item weights must be >= 0");
              }
            }
            const int items = static_cast<int>(f.item_weights.size());
            for (const auto& cover : f.covers) {
              for (int item : cover) {
                if (item < 0 || item >= items) {
                  throw std::out_of_range("coverage item " +
                                          std::to_string(item) +
                                          " out of range");
                }
              }
            }
          },
          [](const CutFunction& f) {
            for (const auto& e : f.edges) {
              if (e.u < 0 || e.u >= f.num_vertices || e.v < 0 ||
                  e.v >= f.num_vertices) {
                throw std::out_of_range("cut edge endpoint out of range");
              }
              if (e.u == e.v) {
                throw std::invalid_argument("cut graph has a self loop at " +
                                            std::to_string(e.u));
              }
              CheckFinite(e.weight, "edge weight");
              if (e.weight < 0.0) {
                throw std::invalid_argument("cut edge weights must be >= 0");
              }
            }
          },
          [](const Modular& f) {
            for (double w : f.weights) CheckFinite(w, "weight");
          },
      },
      spec);
}

double Evaluate(const SetFunctionSpec& spec, const ElementSet& s) {
  const int n = GroundSize(spec);
  if (s.ground_size() != n) {
    throw std::invalid_argument("set over ground size " +
                                std::to_string(s.ground_size()) +
                                " evaluated on function of size " +
                                std::to_string(n));
  }
  return std::visit(
      Overloaded{
          [&](const WeightedAdditiveQuadratic& f) { return EvaluateWaq(f, s); },
          [&](const Coverage& f) { return EvaluateCoverage(f, s); },
          [&](const CutFunction& f) { return EvaluateCut(f, s); },
          [&](const Modular& f) { return EvaluateModular(f, s); },
      },
      spec);
}

double Marginal(const SetFunctionSpec& spec, const ElementSet& s, int x) {
  if (s.Contains(x)) {
    throw std::invalid_argument("marginal of element " + std::to_string(x) +
                                " already in the set");
  }
  return Evaluate(spec, s.With(x)) - Evaluate(spec, s);
}

bool IsNonNegativeCertified(const WeightedAdditiveQuadratic& f) {
  std::vector<double> sorted = f.weights;
  std::sort(sorted.begin(), sorted.end());
  double prefix = 0.0;
  for (size_t k = 1; k <= sorted.size(); ++k) {
    prefix += sorted[k - 1];
    const double kk = static_cast<double>(k);
    if (prefix - f.cost * kk * kk < 0.0) return false;
  }
  return true;
}

ExactOracle::ExactOracle(SetFunctionSpec spec)
    : spec_(std::move(spec)), n_(GroundSize(spec_)) {
  Validate(spec_);
}

FunctionOracle::FunctionOracle(int n,
                               std::function<double(const ElementSet&)> fn)
    : n_(GroundSet(n).size()), fn_(std::move(fn)) {
  if (!fn_) throw std::invalid_argument("FunctionOracle needs a callable");
}

double FunctionOracle::Value(const ElementSet& s) const {
  if (s.ground_size() != n_) {
    throw std::invalid_argument("ground size mismatch in FunctionOracle");
  }
  return fn_(s);
}

std::vector<double> TabulateValues(const ValueOracle& oracle) {
  const int n = oracle.ground_size();
  CheckEnumerable(n, kMaxBruteForceSize, "TabulateValues");
  const uint64_t count = uint64_t{1} << n;
  std::vector<double> values(count);
  for (uint64_t mask = 0; mask < count; ++mask) {
    values[mask] = oracle.Value(ElementSet::FromMask(n, mask));
  }
  return values;
}

Optimum BruteForceOpt(const ValueOracle& oracle) {
  return BruteForceOpt(oracle, Matroid::Unconstrained(oracle.ground_size()));
}

Optimum BruteForceOpt(const ValueOracle& oracle, const Matroid& feasible) {
  const int n = oracle.ground_size();
  CheckEnumerable(n, kMaxBruteForceSize, "BruteForceOpt");
  if (feasible.ground_size() != n) {
    throw std::invalid_argument("matroid and function ground sizes differ");
  }
  Optimum best{ElementSet(n), oracle.Value(ElementSet(n))};
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t mask = 1; mask < count; ++mask) {
    ElementSet s = ElementSet::FromMask(n, mask);
    if (!feasible.IsIndependent(s)) continue;
    const double v = oracle.Value(s);
    if (v > best.value) best = {s, v};
  }
  return best;
}

Optimum BruteForceOpt(const SetFunctionSpec& spec) {
  return BruteForceOpt(ExactOracle(spec));
}

Optimum BruteForceOpt(const SetFunctionSpec& spec, const Matroid& feasible) {
  return BruteForceOpt(ExactOracle(spec), feasible);
}

bool CheckSubmodular(const ValueOracle& oracle, double tolerance) {
  const int n = oracle.ground_size();
  CheckEnumerable(n, kMaxSubmodularityCheckSize, "CheckSubmodular");
  const std::vector<double> f = TabulateValues(oracle);
  const uint64_t full = (uint64_t{1} << n) - 1;
  for (uint64_t b = 0; b <= full; ++b) {
    const uint64_t outside = full & ~b;
    // Enumerate every A ⊆ B, including B itself and the empty set.
    uint64_t a = b;
    while (true) {
      for (uint64_t rest = outside; rest != 0; rest &= rest - 1) {
        const uint64_t x = rest & (~rest + 1);
        const double gain_a = f[a | x] - f[a];
        const double gain_b = f[b | x] - f[b];
        if (gain_a < gain_b - tolerance) return false;
      }
      if (a == 0) break;
      a = (a - 1) & b;
    }
  }
  return true;
}

bool CheckSubmodular(const SetFunctionSpec& spec, double tolerance) {
  return CheckSubmodular(ExactOracle(spec), tolerance);
}

bool CheckMonotone(const ValueOracle& oracle, double tolerance) {
  const int n = oracle.ground_size();
  CheckEnumerable(n, kMaxBruteForceSize, "CheckMonotone");
  const std::vector<double> f = TabulateValues(oracle);
  // Single-element increments suffice: any A ⊆ B is reachable by adding one
  // element at a time.
  for (uint64_t s = 0; s < f.size(); ++s) {
    for (int e = 0; e < n; ++e) {
      const uint64_t bit = uint64_t{1} << e;
      if ((s & bit) == 0 && f[s | bit] < f[s] - tolerance) return false;
    }
  }
  return true;
}

}  // namespace noisysub
