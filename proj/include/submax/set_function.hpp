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

#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "submax/error.hpp"
#include "submax/subset.hpp"

namespace submax {

// Instrumentation shared by every oracle view of one objective.
//
// calls  counts individual value queries.
// rounds counts adaptive batches: one flush = one group of queries whose
//        construction used only answers from earlier flushes. This is the
//        parallel-depth metric the solvers are measured by.
struct OracleCounters {
  std::atomic<long long> calls{0};
  std::atomic<long long> rounds{0};

  void reset() {
    calls.store(0, std::memory_order_relaxed);
    rounds.store(0, std::memory_order_relaxed);
  }
};

struct CounterSnapshot {
  long long calls = 0;
  long long rounds = 0;
};

// Monotone, normalized, nonnegative submodular value oracle over {0..n-1}.
// Immutable after construction; value() is safe to call from concurrent
// workers (counters are atomic).
class SetFunction {
 public:
  explicit SetFunction(int n)
      : n_(n), counters_(std::make_shared<OracleCounters>()) {
    if (n < 1) throw input_error("SetFunction: ground set must be nonempty");
  }

  SetFunction(int n, std::shared_ptr<OracleCounters> counters)
      : n_(n), counters_(std::move(counters)) {
    if (n < 1) throw input_error("SetFunction: ground set must be nonempty");
  }

  virtual ~SetFunction() = default;

  int n() const { return n_; }

  double value(const Subset& s) const {
    counters_->calls.fetch_add(1, std::memory_order_relaxed);
    double v = evaluate(s);
    if (!std::isfinite(v)) throw oracle_error("set function returned a non-finite value");
    return v;
  }

  // Marks the boundary of one adaptive batch of queries.
  void flush_round() const {
    counters_->rounds.fetch_add(1, std::memory_order_relaxed);
  }

  CounterSnapshot counters() const {
    return {counters_->calls.load(std::memory_order_relaxed),
            counters_->rounds.load(std::memory_order_relaxed)};
  }

  void reset_counters() const { counters_->reset(); }

  std::shared_ptr<OracleCounters> counter_handle() const { return counters_; }

 protected:
  virtual double evaluate(const Subset& s) const = 0;

  // Lets wrapper oracles delegate without double-counting the query.
  static double delegate_evaluate(const SetFunction& f, const Subset& s) {
    return f.evaluate(s);
  }

 private:
  int n_;
  std::shared_ptr<OracleCounters> counters_;
};

// f(S) = sum of weights over S.
class ModularSetFunction : public SetFunction {
 public:
  explicit ModularSetFunction(std::vector<double> weights)
      : SetFunction(static_cast<int>(weights.size())), weights_(std::move(weights)) {
    for (double w : weights_)
      if (w < 0) throw input_error("ModularSetFunction: weights must be nonnegative");
  }

  const std::vector<double>& weights() const { return weights_; }

 protected:
  double evaluate(const Subset& s) const override {
    double v = 0;
    for (int j : s.indices()) v += weights_[static_cast<std::size_t>(j)];
    return v;
  }

 private:
  std::vector<double> weights_;
};

// Callback-backed oracle; used by tests and as the black-box entry point.
class LambdaSetFunction : public SetFunction {
 public:
  LambdaSetFunction(int n, std::function<double(const Subset&)> fn)
      : SetFunction(n), fn_(std::move(fn)) {}

 protected:
  double evaluate(const Subset& s) const override { return fn_(s); }

 private:
  std::function<double(const Subset&)> fn_;
};

// Contraction f_G(S) = f(S ∪ G) − f(G). Monotone submodular whenever f is.
// Shares the base oracle's counters; each evaluation issues one base query
// (f(G) is frozen at construction).
class ContractedSetFunction : public SetFunction {
 public:
  ContractedSetFunction(std::shared_ptr<const SetFunction> base, Subset g)
      : SetFunction(base->n(), base->counter_handle()),
        base_(std::move(base)),
        g_(std::move(g)),
        fg_(base_->value(g_)) {}

  double contracted_offset() const { return fg_; }
  const Subset& contracted_set() const { return g_; }

 protected:
  double evaluate(const Subset& s) const override {
    return delegate_evaluate(*base_, s.set_union(g_)) - fg_;
  }

 private:
  std::shared_ptr<const SetFunction> base_;
  Subset g_;
  double fg_;
};

}  // namespace submax
