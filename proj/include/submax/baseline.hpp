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

#include "submax/multilinear.hpp"
#include "submax/subset.hpp"

namespace submax {

struct SequentialGreedyResult {
  Subset chosen;
  double value = 0;
  long long adaptive_rounds = 0;  // one per selection: k for a budget of k
  long long oracle_calls = 0;
};

// The classic one-element-per-round greedy: k rounds, each batching all
// margins and taking the best (ties to the smallest index). The reference
// point for round-count comparisons.
SequentialGreedyResult sequential_greedy_cardinality(const Objective& obj, int k);

}  // namespace submax
