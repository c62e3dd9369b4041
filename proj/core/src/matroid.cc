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

#include "noisysub/matroid.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace noisysub {

Matroid::Matroid(int n,
                 std::variant<UniformData, PartitionData, ContractedData> data)
    : n_(n), data_(std::move(data)) {
  rank_ = ArbitraryBasis().Size();
}

Matroid Matroid::Uniform(int n, int rank) {
  GroundSet ground(n);
  if (rank < 0 || rank > n) {
    throw std::invalid_argument("uniform matroid rank must be in [0, n], got " +
                                std::to_string(rank));
  }
  return Matroid(ground.size(), UniformData{rank});
}

Matroid Matroid::Partition(int n, std::vector<std::vector<int>> parts,
                           std::vector<int> capacities) {
  GroundSet ground(n);
  if (parts.size() != capacities.size()) {
    throw std::invalid_argument("partition matroid needs one capacity per part");
  }
  std::vector<int> part_of(n, -1);
  for (size_t j = 0; j < parts.size(); ++j) {
    for (int e : parts[j]) {
      if (e < 0 || e >= n) {
        throw std::out_of_range("partition element " + std::to_string(e) +
                                " outside ground set");
      }
      if (part_of[e] != -1) {
        throw std::invalid_argument("element " + std::to_string(e) +
                                    " appears in two parts");
      }
      part_of[e] = static_cast<int>(j);
    }
    const int cap = capacities[j];
    if (cap < 0 || cap > static_cast<int>(parts[j].size())) {
      throw std::invalid_argument("capacity of part " + std::to_string(j) +
                                  " must be in [0, part size]");
    }
  }
  for (int e = 0; e < n; ++e) {
    if (part_of[e] == -1) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " is not covered by any part");
    }
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());
  return Matroid(ground.size(), PartitionData{std::move(parts),
                                              std::move(capacities),
                                              std::move(part_of)});
}

Matroid Matroid::Contract(const Matroid& base, const ElementSet& pinned) {
  base.CheckGround(pinned);
  if (!base.IsIndependent(pinned)) {
    throw std::invalid_argument("contraction set " + pinned.ToString() +
                                " is not independent");
  }
  return Matroid(base.n_, ContractedData{std::make_shared<const Matroid>(base),
                                         pinned});
}

Matroid::Kind Matroid::kind() const {
  switch (data_.index()) {
    case 0:
      return Kind::kUniform;
    case 1:
      return Kind::kPartition;
    default:
      return Kind::kContracted;
  }
}

void Matroid::CheckGround(const ElementSet& s) const {
  if (s.ground_size() != n_) {
    throw std::invalid_argument("set over ground size " +
                                std::to_string(s.ground_size()) +
                                " queried against matroid of size " +
                                std::to_string(n_));
  }
}

bool Matroid::IsIndependent(const ElementSet& s) const {
  CheckGround(s);
  if (const auto* u = std::get_if<UniformData>(&data_)) {
    return s.Size() <= u->rank;
  }
  if (const auto* p = std::get_if<PartitionData>(&data_)) {
    std::vector<int> used(p->parts.size(), 0);
    bool ok = true;
    s.ForEach([&](int e) {
      const int j = p->part_of[e];
      if (++used[j] > p->capacities[j]) ok = false;
    });
    return ok;
  }
  const auto& c = std::get<ContractedData>(data_);
  if (s.Intersects(c.pinned)) return false;
  return c.base->IsIndependent(s | c.pinned);
}

ElementSet Matroid::ArbitraryBasis() const {
  ElementSet basis(n_);
  for (int e = 0; e < n_; ++e) {
    ElementSet candidate = basis.With(e);
    if (IsIndependent(candidate)) basis = candidate;
  }
  return basis;
}

ElementSet Matroid::MaxWeightIndependentSet(
    std::span<const double> weights) const {
  if (static_cast<int>(weights.size()) != n_) {
    throw std::invalid_argument("weight vector length must equal ground size");
  }
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  ElementSet chosen(n_);
  for (int e : order) {
    if (!(weights[e] > 0.0)) break;
    ElementSet candidate = chosen.With(e);
    if (IsIndependent(candidate)) chosen = candidate;
  }
  return chosen;
}

std::vector<CapacityGroup> Matroid::CapacityGroups() const {
  if (const auto* u = std::get_if<UniformData>(&data_)) {
    CapacityGroup all;
    all.elements.resize(n_);
    std::iota(all.elements.begin(), all.elements.end(), 0);
    all.capacity = u->rank;
    return {std::move(all)};
  }
  if (const auto* p = std::get_if<PartitionData>(&data_)) {
    std::vector<CapacityGroup> groups;
    for (size_t j = 0; j < p->parts.size(); ++j) {
      groups.push_back({p->parts[j], p->capacities[j]});
    }
    return groups;
  }
  const auto& c = std::get<ContractedData>(data_);
  std::vector<CapacityGroup> groups = c.base->CapacityGroups();
  for (auto& g : groups) {
    std::vector<int> kept;
    for (int e : g.elements) {
      if (c.pinned.Contains(e)) {
        --g.capacity;
      } else {
        kept.push_back(e);
      }
    }
    g.elements = std::move(kept);
  }
  return groups;
}

ElementSet Matroid::Available() const {
  ElementSet out(n_);
  for (const auto& g : CapacityGroups()) {
    if (g.capacity <= 0) continue;
    for (int e : g.elements) out.Insert(e);
  }
  return out;
}

bool Matroid::IsFree() const {
  for (const auto& g : CapacityGroups()) {
    if (g.capacity > 0 && g.capacity < static_cast<int>(g.elements.size())) {
      return false;
    }
  }
  return true;
}

bool Matroid::InPolytope(const FractionalPoint& x, double tolerance) const {
  if (x.size() != n_) return false;
  const ElementSet available = Available();
  for (int i = 0; i < n_; ++i) {
    if (!available.Contains(i) && x[i] > tolerance) return false;
  }
  for (const auto& g : CapacityGroups()) {
    double sum = 0.0;
    for (int e : g.elements) sum += x[e];
    if (sum > g.capacity + tolerance) return false;
  }
  return true;
}

int Matroid::uniform_rank() const { return std::get<UniformData>(data_).rank; }

const std::vector<std::vector<int>>& Matroid::partition_parts() const {
  return std::get<PartitionData>(data_).parts;
}

const std::vector<int>& Matroid::partition_capacities() const {
  return std::get<PartitionData>(data_).capacities;
}

const Matroid& Matroid::contracted_base() const {
  return *std::get<ContractedData>(data_).base;
}

const ElementSet& Matroid::contracted_pinned() const {
  return std::get<ContractedData>(data_).pinned;
}

}  // namespace noisysub
