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

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "submax/error.hpp"

namespace submax {

// Subset of a ground set {0..n-1}, stored as a dynamic bitset. Constructible
// from a 64-bit mask (n <= 64) or from an index list, so exhaustive
// enumeration and sparse callers share one type.
class Subset {
 public:
  Subset() = default;

  explicit Subset(int n) : n_(n), words_((n + 63) / 64, 0) {
    if (n < 0) throw input_error("Subset: negative ground size");
  }

  static Subset from_mask(int n, std::uint64_t mask) {
    if (n > 64) throw input_error("Subset::from_mask requires n <= 64");
    Subset s(n);
    if (n > 0) s.words_[0] = mask & low_mask(n);
    return s;
  }

  static Subset from_indices(int n, std::span<const int> indices) {
    Subset s(n);
    for (int j : indices) s.add(j);
    return s;
  }

  static Subset full(int n) {
    Subset s(n);
    for (auto& w : s.words_) w = ~0ull;
    if (n % 64 != 0 && !s.words_.empty()) s.words_.back() = low_mask(n % 64);
    return s;
  }

  int ground_size() const { return n_; }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool contains(int j) const {
    check_index(j);
    return (words_[j / 64] >> (j % 64)) & 1ull;
  }

  void add(int j) {
    check_index(j);
    words_[j / 64] |= (1ull << (j % 64));
  }

  void remove(int j) {
    check_index(j);
    words_[j / 64] &= ~(1ull << (j % 64));
  }

  std::uint64_t mask() const {
    if (n_ > 64) throw input_error("Subset::mask requires n <= 64");
    return words_.empty() ? 0ull : words_[0];
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
    return out;
  }

  Subset set_union(const Subset& o) const {
    Subset r = widest(o);
    for (std::size_t i = 0; i < o.words_.size() && i < r.words_.size(); ++i)
      r.words_[i] |= o.words_[i];
    return r;
  }

  Subset set_intersection(const Subset& o) const {
    Subset r(*this);
    for (std::size_t i = 0; i < r.words_.size(); ++i)
      r.words_[i] &= (i < o.words_.size() ? o.words_[i] : 0ull);
    return r;
  }

  bool operator==(const Subset& o) const {
    int m = static_cast<int>(std::max(words_.size(), o.words_.size()));
    for (int i = 0; i < m; ++i) {
      std::uint64_t a = i < static_cast<int>(words_.size()) ? words_[i] : 0;
      std::uint64_t b = i < static_cast<int>(o.words_.size()) ? o.words_[i] : 0;
      if (a != b) return false;
    }
    return true;
  }

  // Lexicographic order on the sorted index lists. Used for deterministic
  // argmax tie-breaking.
  bool lex_less(const Subset& o) const {
    auto a = indices();
    auto b = o.indices();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  static std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~0ull : ((1ull << bits) - 1);
  }

  Subset widest(const Subset& o) const {
    Subset r(*this);
    if (o.n_ > r.n_) {
      r.n_ = o.n_;
      r.words_.resize(o.words_.size(), 0);
    }
    return r;
  }

  void check_index(int j) const {
    if (j < 0 || j >= n_) throw input_error("Subset: index out of range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace submax
