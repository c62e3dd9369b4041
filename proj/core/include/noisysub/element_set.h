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

#ifndef NOISYSUB_ELEMENT_SET_H_
#define NOISYSUB_ELEMENT_SET_H_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace noisysub {

// Largest ground set an ElementSet can represent.
inline constexpr int kMaxGroundSize = 256;

// A ground set N = {0, ..., n-1}.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const { return n_; }

 private:
  int n_;
};

// A subset of a ground set, stored as a fixed-width bit vector. Two sets over
// the same ground set compare equal iff their memberships are identical, and
// bits at positions >= n are always zero, so the raw words are a canonical
// key for the set.
class ElementSet {
 public:
  static constexpr int kWords = kMaxGroundSize / 64;

  ElementSet() = default;
  // The empty set over a ground set of size n.
  explicit ElementSet(int n);
  explicit ElementSet(const GroundSet& ground) : ElementSet(ground.size()) {}

  static ElementSet Full(int n);
  static ElementSet Of(int n, std::initializer_list<int> elements);
  static ElementSet Of(int n, std::span<const int> elements);
  // Bit i of `mask` is element i. Requires n <= 64.
  static ElementSet FromMask(int n, uint64_t mask);

  int ground_size() const { return n_; }

  bool Contains(int e) const {
    CheckElement(e);
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void Insert(int e) {
    CheckElement(e);
    words_[e >> 6] |= uint64_t{1} << (e & 63);
  }
  void Erase(int e) {
    CheckElement(e);
    words_[e >> 6] &= ~(uint64_t{1} << (e & 63));
  }
  // S + e and S - e.
  ElementSet With(int e) const {
    ElementSet out = *this;
    out.Insert(e);
    return out;
  }
  ElementSet Without(int e) const {
    ElementSet out = *this;
    out.Erase(e);
    return out;
  }

  int Size() const {
    int count = 0;
    for (uint64_t w : words_) count += std::popcount(w);
    return count;
  }
  bool Empty() const {
    for (uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  ElementSet operator|(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  // Set difference.
  ElementSet operator-(const ElementSet& other) const;
  ElementSet Complement() const;

  bool IsSubsetOf(const ElementSet& other) const;
  bool Intersects(const ElementSet& other) const;

  // Elements in ascending order.
  std::vector<int> Elements() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (int w = 0; w < kWords; ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  // Membership of elements 0..63 as a bit mask.
  uint64_t LowMask() const { return words_[0]; }
  std::span<const uint64_t, kWords> words() const { return words_; }

  // "{0,2,5}".
  std::string ToString() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  void CheckElement(int e) const;
  void CheckSameGround(const ElementSet& other) const;

  std::array<uint64_t, kWords> words_{};
  int n_ = 0;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const;
};

}  // namespace noisysub

#endif  // NOISYSUB_ELEMENT_SET_H_
