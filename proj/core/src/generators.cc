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

#include "noisysub/generators.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace noisysub {

Coverage RandomCoverage(int n, const CoverageParams& params, Rng& rng) {
  GroundSet ground(n);
  if (params.items < 1) throw std::invalid_argument("coverage needs >= 1 item");
  if (params.weight_lo < 0.0 || params.weight_hi < params.weight_lo) {
    throw std::invalid_argument("coverage weight range must be 0 <= lo <= hi");
  }
  Coverage f;
  f.covers.resize(ground.size());
  for (int e = 0; e < n; ++e) {
    for (int item = 0; item < params.items; ++item) {
      if (rng.Bernoulli(params.cover_probability)) f.covers[e].push_back(item);
    }
  }
  f.item_weights.resize(params.items);
  for (double& w : f.item_weights) {
    w = params.weight_lo + (params.weight_hi - params.weight_lo) * rng.Uniform01();
  }
  return f;
}

CutFunction RandomCut(int n, double edge_probability, Rng& rng) {
  GroundSet ground(n);
  CutFunction f;
  f.num_vertices = ground.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(edge_probability)) {
        f.edges.push_back({u, v, rng.Uniform01OpenLow()});
      }
    }
  }
  return f;
}

Modular RandomModular(int n, double lo, double hi, Rng& rng) {
  GroundSet ground(n);
  Modular f;
  f.weights.resize(ground.size());
  for (double& w : f.weights) w = lo + (hi - lo) * rng.Uniform01();
  return f;
}

WeightedAdditiveQuadratic RandomCertifiedWaq(int n, double weight_hi,
                                             double cost, Rng& rng,
                                             int max_attempts) {
  GroundSet ground(n);
  WeightedAdditiveQuadratic f;
  f.cost = cost;
  f.weights.resize(ground.size());
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (double& w : f.weights) w = weight_hi * rng.Uniform01();
    if (IsNonNegativeCertified(f)) return f;
  }
  throw std::runtime_error("no non-negative instance after " +
                           std::to_string(max_attempts) + " attempts");
}

Matroid RandomPartitionMatroid(int n, int num_parts, Rng& rng) {
  GroundSet ground(n);
  if (num_parts < 1 || num_parts > n) {
    throw std::invalid_argument("num_parts must be in [1, n]");
  }
  while (true) {
    std::vector<std::vector<int>> parts(num_parts);
    for (int e = 0; e < n; ++e) parts[rng.UniformInt(num_parts)].push_back(e);
    bool any_empty = false;
    for (const auto& p : parts) any_empty = any_empty || p.empty();
    if (any_empty) continue;
    std::vector<int> caps;
    for (const auto& p : parts) {
      caps.push_back(1 + static_cast<int>(rng.UniformInt(p.size())));
    }
    return Matroid::Partition(ground.size(), std::move(parts), std::move(caps));
  }
}

}  // namespace noisysub
