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

#include "submax/generators.hpp"

#include "submax/rng.hpp"

namespace submax {

CoverageSystem generate_random_coverage(int universe_size, int n, double density,
                                        std::uint64_t seed) {
  if (universe_size < 1 || n < 1)
    throw input_error("generate_random_coverage: need universe_size, n >= 1");
  if (!(density > 0.0 && density <= 1.0))
    throw input_error("generate_random_coverage: density must lie in (0, 1]");
  std::uint64_t s = derive_seed(seed, "gen/coverage");
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < universe_size; ++e)
      if (to_unit(mix64(s, static_cast<std::uint64_t>(i),
                        static_cast<std::uint64_t>(e))) < density)
        sets[static_cast<std::size_t>(i)].push_back(e);
  return CoverageSystem::make(universe_size, std::move(sets));
}

PackingInstance generate_random_packing(int m, int n, double density, double lo,
                                        std::uint64_t seed) {
  if (m < 1 || n < 1) throw input_error("generate_random_packing: need m, n >= 1");
  if (!(density > 0.0 && density <= 1.0))
    throw input_error("generate_random_packing: density must lie in (0, 1]");
  if (!(lo >= 0.0 && lo <= 1.0))
    throw input_error("generate_random_packing: lo must lie in [0, 1]");
  std::uint64_t s = derive_seed(seed, "gen/packing");
  std::vector<PackingTriplet> out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint64_t u = mix64(s, static_cast<std::uint64_t>(i),
                              static_cast<std::uint64_t>(j));
      if (to_unit(u) >= density) continue;
      double v = lo + (1.0 - lo) * to_unit(splitmix64(u));
      out.push_back({i, j, v});
    }
  }
  return PackingInstance::make(m, n, std::move(out));
}

std::vector<double> generate_random_costs(int n, double lo, double hi,
                                          std::uint64_t seed) {
  if (n < 1) throw input_error("generate_random_costs: need n >= 1");
  if (!(lo <= hi)) throw input_error("generate_random_costs: lo > hi");
  std::uint64_t s = derive_seed(seed, "gen/costs");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    out[static_cast<std::size_t>(j)] = lo + (hi - lo) * to_unit(mix64(s, static_cast<std::uint64_t>(j)));
  return out;
}

}  // namespace submax
