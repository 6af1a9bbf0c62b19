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

#include <functional>

#include "submax/set_function.hpp"
#include "submax/subset.hpp"

namespace submax {

struct BruteForceResult {
  Subset best;
  double value = 0;
};

// Exhaustive argmax of f over feasible subsets; the reference oracle for
// every solver test. Ties break to the lexicographically smallest index
// list. Refuses n > 20.
BruteForceResult brute_force_opt(const SetFunction& f,
                                 const std::function<bool(const Subset&)>& feasible);

}  // namespace submax
