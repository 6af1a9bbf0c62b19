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

#include <stdexcept>
#include <string>

namespace submax {

// Invalid caller input: bad parameters, malformed instances, infeasible
// configuration. The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A value oracle returned something unusable (NaN/inf).
class oracle_error : public std::runtime_error {
 public:
  explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

// A safety guard tripped (e.g. max_rounds exceeded). The CLI maps this to
// exit code 3.
class guard_abort : public std::runtime_error {
 public:
  explicit guard_abort(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace submax
