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
#include <memory>
#include <vector>

#include "submax/set_function.hpp"
#include "submax/subset.hpp"

namespace submax {

// Explicit set system over a universe of size `universe_size`. The induced
// objective is f(S) = |union of A_i for i in S|.
struct CoverageSystem {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;             // sorted universe indices
  std::vector<std::vector<int>> element_to_sets;  // inverse: element -> covering sets

  int n() const { return static_cast<int>(sets.size()); }

  // Validates indices, sorts/dedups, builds the inverted index.
  static CoverageSystem make(int universe_size, std::vector<std::vector<int>> sets);
};

// f(S) = number of universe elements covered by the sets indexed by S.
double coverage_value(const CoverageSystem& sys, const Subset& s);

class CoverageFunction : public SetFunction {
 public:
  explicit CoverageFunction(CoverageSystem sys);

  const CoverageSystem& system() const { return sys_; }

 protected:
  double evaluate(const Subset& s) const override;

 private:
  CoverageSystem sys_;
  int blocks_ = 0;
  // Per-set universe bitmap, `blocks_` words each, for fast unions.
  std::vector<std::uint64_t> masks_;
};

}  // namespace submax
