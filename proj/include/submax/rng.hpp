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

#include <cstdint>
#include <string_view>

namespace submax {

// All randomness in the library flows from a single master seed through
// derive_seed(master, tag, index). Streams are counter-based (stateless per
// draw), so results do not depend on evaluation order or thread count.

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Combine up to three counters into one stream value.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t a,
                           std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(seed ^ (a * 0x9e3779b97f4a7c15ull));
  h = splitmix64(h ^ (b * 0xc2b2ae3d27d4eb4full));
  h = splitmix64(h ^ (c * 0x165667b19e3779f9ull));
  return h;
}

// Uniform double in [0, 1) from 53 high bits. Platform-independent mapping;
// std::uniform_real_distribution is implementation-defined and not used.
inline double to_unit(std::uint64_t v) {
  return static_cast<double>(v >> 11) * 0x1.0p-53;
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ull;
  }
  return h;
}

// Named sub-stream of a master seed, e.g. derive_seed(seed, "rpg/sample", i).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index = 0) {
  return mix64(master ^ fnv1a(tag), index);
}

// Small sequential generator for code that wants a stateful stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x5851f42d4c957f2dull)) {}

  std::uint64_t next() {
    state_ = splitmix64(state_);
    return state_;
  }

  double unit() { return to_unit(next()); }

  // Uniform integer in [0, bound) by rejection-free scaling (bias < 2^-53
  // for desk-scale bounds).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(unit() * static_cast<double>(bound));
  }

 private:
  std::uint64_t state_;
};

}  // namespace submax
