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
#include <vector>

#include "submax/coverage.hpp"
#include "submax/packing_instance.hpp"

namespace submax {

// Seeded test-instance generators. Identical (arguments, seed) always
// produce identical instances.

// Each universe element lands in each set independently with probability
// `density`.
CoverageSystem generate_random_coverage(int universe_size, int n, double density,
                                        std::uint64_t seed);

// Sparse matrix with entries in [lo, 1], each (i, j) present with
// probability `density`.
PackingInstance generate_random_packing(int m, int n, double density, double lo,
                                        std::uint64_t seed);

// Uniform costs in [lo, hi].
std::vector<double> generate_random_costs(int n, double lo, double hi,
                                          std::uint64_t seed);

}  // namespace submax
