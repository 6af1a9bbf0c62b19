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

#include "submax/brute_force.hpp"

#include <cstdint>

namespace submax {

BruteForceResult brute_force_opt(
    const SetFunction& f, const std::function<bool(const Subset&)>& feasible) {
  const int n = f.n();
  if (n > 20)
    throw input_error("brute_force_opt: refusing n > 20 (exponential enumeration)");

  BruteForceResult best{Subset(n), 0.0};
  bool have = false;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Subset s = Subset::from_mask(n, mask);
    if (!feasible(s)) continue;
    double v = f.value(s);
    if (!have || v > best.value ||
        (v == best.value && s.lex_less(best.best))) {
      best = {s, v};
      have = true;
    }
  }
  if (!have) throw input_error("brute_force_opt: no feasible subset (not even the empty set)");
  return best;
}

}  // namespace submax
