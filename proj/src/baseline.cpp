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

#include "submax/baseline.hpp"

namespace submax {

SequentialGreedyResult sequential_greedy_cardinality(const Objective& obj, int k) {
  if (k < 1) throw input_error("sequential_greedy_cardinality: k must be >= 1");
  const int n = obj.n();
  const CounterSnapshot start = obj.counters();

  SequentialGreedyResult out;
  out.chosen = Subset(n);
  double current = 0;
  const int picks = std::min(k, n);
  for (int round = 0; round < picks; ++round) {
    // One batch: every candidate margin against the current set.
    int best = -1;
    double best_margin = 0;
    for (int j = 0; j < n; ++j) {
      if (out.chosen.contains(j)) continue;
      Subset with = out.chosen;
      with.add(j);
      double margin = obj.f->value(with) - current;
      if (best < 0 || margin > best_margin) {
        best = j;
        best_margin = margin;
      }
    }
    obj.f->flush_round();
    if (best < 0) break;
    out.chosen.add(best);
    current += best_margin;
  }
  out.value = current;
  out.adaptive_rounds = obj.counters().rounds - start.rounds;
  out.oracle_calls = obj.counters().calls - start.calls;
  return out;
}

}  // namespace submax
