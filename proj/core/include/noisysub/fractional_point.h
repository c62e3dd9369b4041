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

#ifndef NOISYSUB_FRACTIONAL_POINT_H_
#define NOISYSUB_FRACTIONAL_POINT_H_

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noisysub/element_set.h"

namespace noisysub {

// A point x in [0, 1]^n.
class FractionalPoint {
 public:
  explicit FractionalPoint(std::vector<double> coords)
      : coords_(std::move(coords)) {
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (!(coords_[i] >= 0.0 && coords_[i] <= 1.0)) {
        throw std::invalid_argument("coordinate " + std::to_string(i) +
                                    " outside [0, 1]: " +
                                    std::to_string(coords_[i]));
      }
    }
  }

  static FractionalPoint Zeros(int n) {
    return FractionalPoint(std::vector<double>(n, 0.0));
  }
  static FractionalPoint Indicator(const ElementSet& s) {
    std::vector<double> coords(s.ground_size(), 0.0);
    s.ForEach([&](int e) { coords[e] = 1.0; });
    return FractionalPoint(std::move(coords));
  }

  int size() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

 private:
  std::vector<double> coords_;
};

}  // namespace noisysub

#endif  // NOISYSUB_FRACTIONAL_POINT_H_
