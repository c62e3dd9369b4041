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

#ifndef NOISYSUB_MATROID_H_
#define NOISYSUB_MATROID_H_

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "noisysub/element_set.h"
#include "noisysub/fractional_point.h"

namespace noisysub {

// One constraint |S ∩ elements| <= capacity.
struct CapacityGroup {
  std::vector<int> elements;
  int capacity = 0;
};

// A matroid given by its independence oracle. Three variants:
//
//   Uniform(r):            S independent iff |S| <= r.
//   Partition(parts, cap): S independent iff |S ∩ part_j| <= cap_j for all j.
//                          Parts must be disjoint and cover the ground set.
//   Contracted(M, H):      S independent iff S ∩ H = ∅ and S ∪ H is
//                          independent in M. H must be independent in M.
//
// Unconstrained maximization is Uniform(n). Matroids are immutable; a
// contraction shares its base.
class Matroid {
 public:
  enum class Kind { kUniform, kPartition, kContracted };

  static Matroid Uniform(int n, int rank);
  static Matroid Unconstrained(int n) { return Uniform(n, n); }
  static Matroid Partition(int n, std::vector<std::vector<int>> parts,
                           std::vector<int> capacities);
  static Matroid Contract(const Matroid& base, const ElementSet& pinned);

  Kind kind() const;
  int ground_size() const { return n_; }

  // For a Contracted matroid, sets meeting the pinned set are dependent.
  bool IsIndependent(const ElementSet& s) const;
  int Rank() const { return rank_; }
  // Greedy by ascending element id.
  ElementSet ArbitraryBasis() const;
  // Classic matroid greedy: descending weight (ties by id), skipping
  // elements with weight <= 0.
  ElementSet MaxWeightIndependentSet(std::span<const double> weights) const;

  // Elements that appear in at least one independent set.
  ElementSet Available() const;
  // True when every subset of Available() is independent.
  bool IsFree() const;

  // The same independence system as a list of disjoint capacity
  // constraints over Available(). Elements outside Available() appear in no
  // group.
  std::vector<CapacityGroup> CapacityGroups() const;
  // x_i = 0 outside Available() and every group sum within capacity, each up
  // to `tolerance`.
  bool InPolytope(const FractionalPoint& x, double tolerance = 1e-9) const;

  // Variant accessors (for serialization). Calling the wrong one throws.
  int uniform_rank() const;
  const std::vector<std::vector<int>>& partition_parts() const;
  const std::vector<int>& partition_capacities() const;
  const Matroid& contracted_base() const;
  const ElementSet& contracted_pinned() const;

 private:
  struct UniformData {
    int rank;
  };
  struct PartitionData {
    std::vector<std::vector<int>> parts;
    std::vector<int> capacities;
    std::vector<int> part_of;
  };
  struct ContractedData {
    std::shared_ptr<const Matroid> base;
    ElementSet pinned;
  };

  Matroid(int n, std::variant<UniformData, PartitionData, ContractedData> data);
  void CheckGround(const ElementSet& s) const;

  int n_;
  std::variant<UniformData, PartitionData, ContractedData> data_;
  int rank_ = 0;
};

}  // namespace noisysub

#endif  // NOISYSUB_MATROID_H_
