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

#include <vector>

#include "submax/error.hpp"
#include "submax/point.hpp"

namespace submax {

struct PackingTriplet {
  int row = 0;
  int col = 0;
  double value = 0;
};

// Nonnegative constraint system A x <= 1 with A in [0,1]^{m x n}, sparse
// triplet storage plus row/column adjacency built by make().
struct PackingInstance {
  int m = 0;
  int n = 0;
  std::vector<PackingTriplet> entries;
  bool pruned = false;

  // Derived adjacency; (index, value) pairs sorted by index.
  std::vector<std::vector<std::pair<int, double>>> rows;
  std::vector<std::vector<std::pair<int, double>>> cols;

  // Validates entries (range, duplicates, the per-column A e_j <= 1
  // assumption) and builds adjacency.
  static PackingInstance make(int m, int n, std::vector<PackingTriplet> entries,
                              bool pruned = false);

  double column_max(int j) const;
  int column_support(int j) const { return static_cast<int>(cols[static_cast<std::size_t>(j)].size()); }
  int max_column_support() const;

  // A x for a full point.
  std::vector<double> load(const Point& x) const;
  // max_i (A x)_i.
  double max_load(const Point& x) const;
};

}  // namespace submax
