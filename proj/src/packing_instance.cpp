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

#include "submax/packing_instance.hpp"

#include <algorithm>
#include <string>

namespace submax {

PackingInstance PackingInstance::make(int m, int n,
                                      std::vector<PackingTriplet> entries,
                                      bool pruned) {
  if (m < 1 || n < 1) throw input_error("PackingInstance: need m, n >= 1");
  PackingInstance inst;
  inst.m = m;
  inst.n = n;
  inst.pruned = pruned;
  inst.rows.assign(static_cast<std::size_t>(m), {});
  inst.cols.assign(static_cast<std::size_t>(n), {});
  for (const auto& t : entries) {
    if (t.row < 0 || t.row >= m || t.col < 0 || t.col >= n)
      throw input_error("PackingInstance: entry index out of range");
    if (!(t.value >= 0.0 && t.value <= 1.0))
      throw input_error("PackingInstance: entries must lie in [0,1] (column " +
                        std::to_string(t.col) + ")");
    if (t.value == 0.0) continue;
    inst.rows[static_cast<std::size_t>(t.row)].push_back({t.col, t.value});
    inst.cols[static_cast<std::size_t>(t.col)].push_back({t.row, t.value});
    inst.entries.push_back(t);
  }
  for (int i = 0; i < m; ++i) {
    auto& r = inst.rows[static_cast<std::size_t>(i)];
    std::sort(r.begin(), r.end());
    for (std::size_t a = 1; a < r.size(); ++a)
      if (r[a].first == r[a - 1].first)
        throw input_error("PackingInstance: duplicate entry at row " + std::to_string(i));
  }
  for (int j = 0; j < n; ++j) {
    auto& c = inst.cols[static_cast<std::size_t>(j)];
    std::sort(c.begin(), c.end());
    // Singleton feasibility A e_j <= 1: every entry of column j at most 1,
    // already checked above entrywise.
  }
  std::sort(inst.entries.begin(), inst.entries.end(),
            [](const PackingTriplet& a, const PackingTriplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  return inst;
}

double PackingInstance::column_max(int j) const {
  double mx = 0;
  for (const auto& [i, v] : cols[static_cast<std::size_t>(j)]) mx = std::max(mx, v);
  return mx;
}

int PackingInstance::max_column_support() const {
  int mx = 0;
  for (int j = 0; j < n; ++j) mx = std::max(mx, column_support(j));
  return mx;
}

std::vector<double> PackingInstance::load(const Point& x) const {
  std::vector<double> out(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i)
    for (const auto& [j, v] : rows[static_cast<std::size_t>(i)])
      out[static_cast<std::size_t>(i)] += v * x[static_cast<std::size_t>(j)];
  return out;
}

double PackingInstance::max_load(const Point& x) const {
  double mx = 0;
  for (double l : load(x)) mx = std::max(mx, l);
  return mx;
}

}  // namespace submax
