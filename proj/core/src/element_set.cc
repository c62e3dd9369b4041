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

#include "noisysub/element_set.h"

#include <stdexcept>
#include <string>

namespace noisysub {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size must be in [1, " +
                                std::to_string(kMaxGroundSize) + "], got " +
                                std::to_string(n));
  }
}

ElementSet::ElementSet(int n) : n_(n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::invalid_argument("element set ground size out of range: " +
                                std::to_string(n));
  }
}

ElementSet ElementSet::Full(int n) {
  ElementSet s(n);
  for (int w = 0; w < kWords; ++w) {
    const int lo = w * 64;
    if (n >= lo + 64) {
      s.words_[w] = ~uint64_t{0};
    } else if (n > lo) {
      s.words_[w] = (uint64_t{1} << (n - lo)) - 1;
    }
  }
  return s;
}

ElementSet ElementSet::Of(int n, std::initializer_list<int> elements) {
  return Of(n, std::span<const int>(elements.begin(), elements.size()));
}

ElementSet ElementSet::Of(int n, std::span<const int> elements) {
  ElementSet s(n);
  for (int e : elements) s.Insert(e);
  return s;
}

ElementSet ElementSet::FromMask(int n, uint64_t mask) {
  if (n > 64) throw std::invalid_argument("FromMask requires n <= 64");
  ElementSet s(n);
  if (n < 64 && (mask >> n) != 0) {
    throw std::out_of_range("mask has bits beyond the ground set");
  }
  s.words_[0] = mask;
  return s;
}

void ElementSet::CheckElement(int e) const {
  if (e < 0 || e >= n_) {
    throw std::out_of_range("element " + std::to_string(e) +
                            " outside ground set of size " +
                            std::to_string(n_));
  }
}

void ElementSet::CheckSameGround(const ElementSet& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("element sets over different ground sets (" +
                                std::to_string(n_) + " vs " +
                                std::to_string(other.n_) + ")");
  }
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  CheckSameGround(other);
  ElementSet out = *this;
  for (int w = 0; w < kWords; ++w) out.words_[w] |= other.words_[w];
  return out;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  CheckSameGround(other);
  ElementSet out = *this;
  for (int w = 0; w < kWords; ++w) out.words_[w] &= other.words_[w];
  return out;
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  CheckSameGround(other);
  ElementSet out = *this;
  for (int w = 0; w < kWords; ++w) out.words_[w] &= ~other.words_[w];
  return out;
}

ElementSet ElementSet::Complement() const { return Full(n_) - *this; }

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  CheckSameGround(other);
  for (int w = 0; w < kWords; ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool ElementSet::Intersects(const ElementSet& other) const {
  CheckSameGround(other);
  for (int w = 0; w < kWords; ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

std::vector<int> ElementSet::Elements() const {
  std::vector<int> out;
  out.reserve(Size());
  ForEach([&](int e) { out.push_back(e); });
  return out;
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  out += '}';
  return out;
}

size_t ElementSetHash::operator()(const ElementSet& s) const {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(s.ground_size());
  for (uint64_t w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return static_cast<size_t>(h ^ (h >> 31));
}

}  // namespace noisysub
