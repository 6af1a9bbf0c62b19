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

#include "submax/coverage.hpp"

#include <algorithm>
#include <bit>

namespace submax {

CoverageSystem CoverageSystem::make(int universe_size,
                                    std::vector<std::vector<int>> sets) {
  if (universe_size < 1) throw input_error("CoverageSystem: universe must be nonempty");
  if (sets.empty()) throw input_error("CoverageSystem: need at least one set");
  CoverageSystem sys;
  sys.universe_size = universe_size;
  sys.sets = std::move(sets);
  for (auto& a : sys.sets) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (int e : a)
      if (e < 0 || e >= universe_size)
        throw input_error("CoverageSystem: universe index out of range");
  }
  sys.element_to_sets.assign(static_cast<std::size_t>(universe_size), {});
  for (int i = 0; i < sys.n(); ++i)
    for (int e : sys.sets[static_cast<std::size_t>(i)])
      sys.element_to_sets[static_cast<std::size_t>(e)].push_back(i);
  return sys;
}

double coverage_value(const CoverageSystem& sys, const Subset& s) {
  if (s.ground_size() > sys.n())
    throw input_error("coverage_value: subset ground set larger than system");
  std::vector<std::uint64_t> covered(static_cast<std::size_t>((sys.universe_size + 63) / 64), 0);
  for (int i : s.indices()) {
    if (i >= sys.n()) throw input_error("coverage_value: set index out of range");
    for (int e : sys.sets[static_cast<std::size_t>(i)])
      covered[static_cast<std::size_t>(e / 64)] |= 1ull << (e % 64);
  }
  int c = 0;
  for (auto w : covered) c += std::popcount(w);
  return static_cast<double>(c);
}

CoverageFunction::CoverageFunction(CoverageSystem sys)
    : SetFunction(sys.n()), sys_(std::move(sys)) {
  blocks_ = (sys_.universe_size + 63) / 64;
  masks_.assign(static_cast<std::size_t>(sys_.n()) * blocks_, 0);
  for (int i = 0; i < sys_.n(); ++i)
    for (int e : sys_.sets[static_cast<std::size_t>(i)])
      masks_[static_cast<std::size_t>(i) * blocks_ + e / 64] |= 1ull << (e % 64);
}

double CoverageFunction::evaluate(const Subset& s) const {
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(blocks_), 0);
  for (int i : s.indices()) {
    const std::uint64_t* m = &masks_[static_cast<std::size_t>(i) * blocks_];
    for (int b = 0; b < blocks_; ++b) covered[static_cast<std::size_t>(b)] |= m[b];
  }
  int c = 0;
  for (auto w : covered) c += std::popcount(w);
  return static_cast<double>(c);
}

}  // namespace submax
