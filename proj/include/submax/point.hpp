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

#include <algorithm>
#include <numeric>
#include <vector>

#include "submax/subset.hpp"

namespace submax {

// Fractional point in [0,1]^n. Callers may hand in coordinates above 1;
// evaluation truncates to the cube (F(x) = F(x ∧ 1)).
using Point = std::vector<double>;

inline Point zeros(int n) { return Point(static_cast<std::size_t>(n), 0.0); }
inline Point ones(int n) { return Point(static_cast<std::size_t>(n), 1.0); }

inline Point clamped01(const Point& x) {
  Point r(x);
  for (double& v : r) v = std::clamp(v, 0.0, 1.0);
  return r;
}

inline double coord_sum(const Point& x) {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

inline double dot(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Coordinatewise max / min.
inline Point join(const Point& a, const Point& b) {
  Point r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

inline Point meet(const Point& a, const Point& b) {
  Point r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], b[i]);
  return r;
}

inline Point indicator(const Subset& s) {
  Point r = zeros(s.ground_size());
  for (int j : s.indices()) r[static_cast<std::size_t>(j)] = 1.0;
  return r;
}

// x + delta on the coordinates in S.
inline Point add_on(const Point& x, const Subset& s, double delta) {
  Point r(x);
  for (int j : s.indices()) r[static_cast<std::size_t>(j)] += delta;
  return r;
}

// x restricted to S (coordinates outside S zeroed): x ∧ S.
inline Point restrict_to(const Point& x, const Subset& s) {
  Point r = zeros(static_cast<int>(x.size()));
  for (int j : s.indices()) r[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
  return r;
}

}  // namespace submax
