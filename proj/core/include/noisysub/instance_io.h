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

#ifndef NOISYSUB_INSTANCE_IO_H_
#define NOISYSUB_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "noisysub/matroid.h"
#include "noisysub/noise.h"
#include "noisysub/set_function.h"

namespace noisysub {

// A problem instance as stored on disk. JSON layout:
//
//   {
//     "function": {"type": "weighted_additive_quadratic",
//                  "weights": [...], "cost": 0.2}
//               | {"type": "coverage", "covers": [[0, 3], ...],
//                  "item_weights": [...]}
//               | {"type": "cut", "num_vertices": 4,
//                  "edges": [[0, 1, 2.5], ...]}
//               | {"type": "modular", "weights": [...]},
//     "matroid":  {"type": "uniform", "n": 10, "rank": 3}
//               | {"type": "partition", "n": 4, "parts": [[0, 1], [2, 3]],
//                  "capacities": [1, 1]}
//               | {"type": "contracted", "base": {...}, "pinned": [5]},
//     "noise":    {"type": "gaussian", "variance": 0.1}
//               | {"type": "bounded_uniform", "half_width": 0.5}
//               | {"type": "shifted_exponential", "rate": 2.0},
//                 each with an optional "clamp_negative": false
//   }
//
// "matroid" and "noise" are optional. Reals are written with enough digits
// to round-trip exactly.
struct Instance {
  SetFunctionSpec function;
  std::optional<Matroid> matroid;
  std::optional<NoiseSpec> noise;
};

// Throws std::invalid_argument on malformed input.
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& instance);

Instance LoadInstance(const std::string& path);
void SaveInstance(const std::string& path, const Instance& instance);

}  // namespace noisysub

#endif  // NOISYSUB_INSTANCE_IO_H_
