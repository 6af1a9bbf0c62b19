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

#include "submax/trace.hpp"

namespace submax {

const char* step_bound_name(StepBound b) {
  switch (b) {
    case StepBound::kGradient: return "gradient";
    case StepBound::kBudget: return "budget";
    case StepBound::kWeightCap: return "weight_cap";
    case StepBound::kGridFloor: return "grid_floor";
    case StepBound::kHeavy: return "heavy";
  }
  return "?";
}

}  // namespace submax
