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

#include "noisysub/solvers.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "noisysub/multilinear.h"

namespace noisysub {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// Below this the two marginals are treated as both zero.
constexpr double kDoubleGreedyMinSum = 1e-12;

void CheckOracleMatroid(const ValueOracle& oracle, const Matroid& matroid) {
  if (oracle.ground_size() != matroid.ground_size()) {
    throw std::invalid_argument("oracle and matroid ground sizes differ");
  }
}

double Snap(double v, double tolerance) {
  if (v < tolerance) return 0.0;
  if (v > 1.0 - tolerance) return 1.0;
  return v;
}

}  // namespace

int ContinuousGreedySteps(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
  const double inverse = 1.0 / delta;
  const double steps = std::round(inverse);
  if (std::abs(inverse - steps) > 1e-9 * steps || steps > 1e8) {
    throw std::invalid_argument("1/delta must be an integer");
  }
  return static_cast<int>(steps);
}

void Validate(const Algorithm& algorithm) {
  std::visit(Overloaded{
                 [](const GreedyAlgorithm&) {},
                 [](const DoubleGreedyAlgorithm&) {},
                 [](const ContinuousGreedyAlgorithm& c) {
                   ContinuousGreedySteps(c.delta);
                   if (c.partial_samples < 1) {
                     throw std::invalid_argument("partial_samples must be >= 1");
                   }
                 },
                 [](const RandomSubsetAlgorithm& r) {
                   if (r.size < 0) {
                     throw std::invalid_argument("subset size must be >= 0");
                   }
                 },
             },
             algorithm);
}

std::string AlgorithmName(const Algorithm& algorithm) {
  return std::visit(Overloaded{
                        [](const GreedyAlgorithm&) { return "greedy"; },
                        [](const DoubleGreedyAlgorithm&) { return "double-greedy"; },
                        [](const ContinuousGreedyAlgorithm&) {
                          return "continuous-greedy";
                        },
                        [](const RandomSubsetAlgorithm&) { return "random-subset"; },
                    },
                    algorithm);
}

ElementSet RunGreedy(const ValueOracle& oracle, const Matroid& matroid) {
  CheckOracleMatroid(oracle, matroid);
  const int n = oracle.ground_size();
  ElementSet current(n);
  double value = oracle.Value(current);
  while (true) {
    int best = -1;
    double best_value = value;
    for (int e = 0; e < n; ++e) {
      if (current.Contains(e)) continue;
      const ElementSet candidate = current.With(e);
      if (!matroid.IsIndependent(candidate)) continue;
      const double v = oracle.Value(candidate);
      if (v > best_value) {
        best = e;
        best_value = v;
      }
    }
    if (best < 0) return current;
    current.Insert(best);
    value = best_value;
  }
}

double DoubleGreedyProbability(double a, double b) {
  if (a > 0.0 && b > 0.0) {
    const double sum = a + b;
    return sum < kDoubleGreedyMinSum ? 0.5 : a / sum;
  }
  return a > 0.0 ? 1.0 : 0.0;
}

ElementSet RunDoubleGreedy(const ValueOracle& oracle, const ElementSet& domain,
                           const DoubleGreedyAlgorithm& options, Rng& rng,
                           std::vector<DoubleGreedyStep>* trace) {
  if (domain.ground_size() != oracle.ground_size()) {
    throw std::invalid_argument("domain and oracle ground sizes differ");
  }
  std::vector<int> order = domain.Elements();
  if (options.shuffle_order) {
    for (size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.UniformInt(i)]);
    }
  }
  ElementSet x(domain.ground_size());
  ElementSet y = domain;
  for (int u : order) {
    const ElementSet x_plus = x.With(u);
    const ElementSet y_minus = y.Without(u);
    // All four values are queried every step; an oracle without persistence
    // would otherwise see stale values for X and Y.
    const double a = oracle.Value(x_plus) - oracle.Value(x);
    const double b = oracle.Value(y_minus) - oracle.Value(y);
    const double p = DoubleGreedyProbability(a, b);
    const bool add = rng.Uniform01() < p;
    if (add) {
      x = x_plus;
    } else {
      y = y_minus;
    }
    if (trace != nullptr) trace->push_back({u, a, b, p, add});
  }
  return x;
}

ElementSet RunDoubleGreedy(const ValueOracle& oracle, Rng& rng) {
  return RunDoubleGreedy(oracle, ElementSet::Full(oracle.ground_size()),
                         DoubleGreedyAlgorithm{}, rng);
}

FractionalPoint RunMeasuredContinuousGreedy(
    const ValueOracle& oracle, const Matroid& matroid,
    const ContinuousGreedyAlgorithm& options, Rng& rng,
    std::vector<FractionalPoint>* trajectory) {
  CheckOracleMatroid(oracle, matroid);
  Validate(Algorithm{options});
  const int n = oracle.ground_size();
  const int steps = ContinuousGreedySteps(options.delta);
  const double delta = 1.0 / steps;
  std::optional<MultilinearExtension> extension;
  if (options.exact_extension) extension.emplace(oracle);

  std::vector<double> x(n, 0.0);
  std::vector<double> weights(n);
  for (int step = 0; step < steps; ++step) {
    if (extension.has_value()) {
      weights = extension->MarginalGains(x);
    } else {
      // Fresh draws of R for every coordinate.
      for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int k = 0; k < options.partial_samples; ++k) {
          const ElementSet r = SampleFromPoint(x, rng);
          if (!r.Contains(i)) sum += oracle.Value(r.With(i)) - oracle.Value(r);
        }
        weights[i] = sum / options.partial_samples;
      }
    }
    const ElementSet direction = matroid.MaxWeightIndependentSet(weights);
    direction.ForEach([&](int i) { x[i] += delta * (1.0 - x[i]); });
    if (trajectory != nullptr) trajectory->emplace_back(x);
  }
  return FractionalPoint(std::move(x));
}

ElementSet PipageRound(const Matroid& matroid, const FractionalPoint& x,
                       Rng& rng, double tolerance) {
  if (!matroid.InPolytope(x, tolerance)) {
    throw std::invalid_argument("point is outside the matroid polytope");
  }
  const int n = matroid.ground_size();
  std::vector<double> y(x.coords().begin(), x.coords().end());
  ElementSet out(n);
  for (const CapacityGroup& group : matroid.CapacityGroups()) {
    std::vector<int> fractional;
    int ones = 0;
    for (int e : group.elements) {
      y[e] = Snap(y[e], tolerance);
      if (y[e] == 1.0) {
        ++ones;
      } else if (y[e] > 0.0) {
        fractional.push_back(e);
      }
    }
    // Each swap makes at least one of the pair integral; keep the other.
    while (fractional.size() >= 2) {
      const int i = fractional[fractional.size() - 2];
      const int j = fractional.back();
      const double up = std::min(1.0 - y[i], y[j]);
      const double down = std::min(y[i], 1.0 - y[j]);
      if (rng.Uniform01() * (up + down) < down) {
        y[i] += up;
        y[j] -= up;
      } else {
        y[i] -= down;
        y[j] += down;
      }
      y[i] = Snap(y[i], tolerance);
      y[j] = Snap(y[j], tolerance);
      fractional.resize(fractional.size() - 2);
      for (int e : {i, j}) {
        if (y[e] == 1.0) {
          ++ones;
        } else if (y[e] > 0.0) {
          fractional.push_back(e);
        }
      }
    }
    if (!fractional.empty()) {
      const int e = fractional.front();
      y[e] = (ones < group.capacity && rng.Uniform01() < y[e]) ? 1.0 : 0.0;
    }
    for (int e : group.elements) {
      if (y[e] == 1.0) out.Insert(e);
    }
  }
  return out;
}

ElementSet SampleRandomSubset(const ElementSet& domain, int k, Rng& rng) {
  std::vector<int> members = domain.Elements();
  const int size = static_cast<int>(members.size());
  if (k < 0 || k > size) {
    throw std::invalid_argument("subset size must be in [0, |domain|]");
  }
  ElementSet out(domain.ground_size());
  for (int i = 0; i < k; ++i) {
    const size_t j = i + rng.UniformInt(size - i);
    std::swap(members[i], members[j]);
    out.Insert(members[i]);
  }
  return out;
}

ElementSet SampleRandomSubset(const GroundSet& ground, int k, Rng& rng) {
  return SampleRandomSubset(ElementSet::Full(ground.size()), k, rng);
}

ElementSet RunSolver(const ValueOracle& oracle, const Matroid& matroid,
                     const Algorithm& algorithm, Rng& rng) {
  CheckOracleMatroid(oracle, matroid);
  Validate(algorithm);
  auto require_free = [&](const char* name) {
    if (!matroid.IsFree()) {
      throw std::invalid_argument(std::string(name) +
                                  " needs an unconstrained (free) matroid");
    }
  };
  return std::visit(
      Overloaded{
          [&](const GreedyAlgorithm&) { return RunGreedy(oracle, matroid); },
          [&](const DoubleGreedyAlgorithm& options) {
            require_free("double greedy");
            return RunDoubleGreedy(oracle, matroid.Available(), options, rng);
          },
          [&](const ContinuousGreedyAlgorithm& options) {
            const FractionalPoint x =
                RunMeasuredContinuousGreedy(oracle, matroid, options, rng);
            return PipageRound(matroid, x, rng);
          },
          [&](const RandomSubsetAlgorithm& options) {
            require_free("random subset");
            const ElementSet domain = matroid.Available();
            return SampleRandomSubset(domain, std::min(options.size, domain.Size()),
                                      rng);
          },
      },
      algorithm);
}

ElementSet RunSolver(const ValueOracle& oracle, const Matroid& matroid,
                     const SolverConfig& config) {
  Rng rng(config.seed);
  return RunSolver(oracle, matroid, config.algorithm, rng);
}

}  // namespace noisysub
