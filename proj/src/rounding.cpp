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

#include "submax/rounding.hpp"

#include <algorithm>

#include "submax/rng.hpp"

namespace submax {

namespace {

// Lifted view g(A) = f(project(A)); shares the base counters.
class LiftedSetFunction : public SetFunction {
 public:
  LiftedSetFunction(std::shared_ptr<const SetFunction> base, std::vector<int> copy_to_base)
      : SetFunction(static_cast<int>(copy_to_base.size()), base->counter_handle()),
        base_(std::move(base)),
        copy_to_base_(std::move(copy_to_base)) {}

 protected:
  double evaluate(const Subset& s) const override {
    Subset projected(base_->n());
    for (int c : s.indices()) projected.add(copy_to_base_[static_cast<std::size_t>(c)]);
    return delegate_evaluate(*base_, projected);
  }

 private:
  std::shared_ptr<const SetFunction> base_;
  std::vector<int> copy_to_base_;
};

double counted_value(const SetFunction& f, const Subset& s) {
  double v = f.value(s);
  f.flush_round();
  return v;
}

}  // namespace

int PartitionMatroid::n() const {
  int total = 0;
  for (const auto& p : parts) total += static_cast<int>(p.size());
  return total;
}

void PartitionMatroid::validate() const {
  if (parts.size() != capacities.size())
    throw input_error("PartitionMatroid: parts/capacities size mismatch");
  int total = n();
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  for (const auto& p : parts) {
    for (int e : p) {
      if (e < 0 || e >= total) throw input_error("PartitionMatroid: element out of range");
      if (seen[static_cast<std::size_t>(e)]) throw input_error("PartitionMatroid: parts overlap");
      seen[static_cast<std::size_t>(e)] = 1;
    }
  }
  for (int k : capacities)
    if (k < 1) throw input_error("PartitionMatroid: capacities must be >= 1");
}

bool PartitionMatroid::feasible(const Subset& s) const {
  for (std::size_t p = 0; p < parts.size(); ++p) {
    int c = 0;
    for (int e : parts[p])
      if (s.contains(e)) ++c;
    if (c > capacities[p]) return false;
  }
  return true;
}

RoundingOutcome round_cardinality(const SetFunction& f, const Point& x, int k,
                                  double eps, std::uint64_t seed) {
  if (static_cast<int>(x.size()) != f.n())
    throw input_error("round_cardinality: dimension mismatch");
  if (k < 1) throw input_error("round_cardinality: k must be >= 1");
  if (!(eps >= 0.0 && eps < 1.0)) throw input_error("round_cardinality: eps must lie in [0, 1)");
  const std::uint64_t s = derive_seed(seed, "round/cardinality");
  Subset chosen(f.n());
  for (int i = 0; i < f.n(); ++i) {
    double p = (1.0 - eps) * std::clamp(x[static_cast<std::size_t>(i)], 0.0, 1.0);
    if (to_unit(mix64(s, static_cast<std::uint64_t>(i))) < p) chosen.add(i);
  }
  RoundingOutcome out;
  out.feasible = chosen.size() <= k;
  out.value = counted_value(f, chosen);
  out.chosen = std::move(chosen);
  out.seed = seed;
  return out;
}

RoundingOutcome round_simple_partition(const SetFunction& f, const Point& x,
                                       const PartitionMatroid& matroid,
                                       std::uint64_t seed) {
  matroid.validate();
  if (static_cast<int>(x.size()) != f.n() || matroid.n() != f.n())
    throw input_error("round_simple_partition: dimension mismatch");
  for (int k : matroid.capacities)
    if (k != 1)
      throw input_error("round_simple_partition: capacities must all be 1 (lift first)");

  const std::uint64_t s = derive_seed(seed, "round/partition");
  Subset chosen(f.n());
  for (std::size_t p = 0; p < matroid.parts.size(); ++p) {
    double mass = 0;
    for (int e : matroid.parts[p]) mass += x[static_cast<std::size_t>(e)];
    if (mass > 1.0 + 1e-9)
      throw input_error("round_simple_partition: part mass exceeds 1");
    // One categorical draw: element e with probability x_e, nothing with the
    // rest.
    double u = to_unit(mix64(s, static_cast<std::uint64_t>(p)));
    double cum = 0;
    for (int e : matroid.parts[p]) {
      cum += x[static_cast<std::size_t>(e)];
      if (u < cum) {
        chosen.add(e);
        break;
      }
    }
  }
  RoundingOutcome out;
  out.feasible = true;
  out.value = counted_value(f, chosen);
  out.chosen = std::move(chosen);
  out.seed = seed;
  return out;
}

Subset LiftedProblem::project(const Subset& lifted) const {
  int base_n = 0;
  for (int b : copy_to_base) base_n = std::max(base_n, b + 1);
  Subset out(base_n);
  for (int c : lifted.indices()) out.add(copy_to_base[static_cast<std::size_t>(c)]);
  return out;
}

LiftedProblem lift_to_simple_partition(std::shared_ptr<const SetFunction> f,
                                       const PartitionMatroid& matroid) {
  matroid.validate();
  if (matroid.n() != f->n())
    throw input_error("lift_to_simple_partition: matroid does not cover the ground set");

  LiftedProblem out;
  for (std::size_t p = 0; p < matroid.parts.size(); ++p) {
    const int copies = matroid.capacities[p];
    for (int c = 0; c < copies; ++c) {
      std::vector<int> copy_class;
      copy_class.reserve(matroid.parts[p].size());
      for (int e : matroid.parts[p]) {
        copy_class.push_back(static_cast<int>(out.copy_to_base.size()));
        out.copy_to_base.push_back(e);
      }
      out.simple.parts.push_back(std::move(copy_class));
      out.simple.capacities.push_back(1);
    }
  }
  out.g = std::make_shared<LiftedSetFunction>(std::move(f), out.copy_to_base);
  return out;
}

RoundingOutcome round_crs_packing(const SetFunction& f, const Point& x,
                                  const PackingInstance& instance, double c,
                                  std::uint64_t seed) {
  if (static_cast<int>(x.size()) != f.n() || instance.n != f.n())
    throw input_error("round_crs_packing: dimension mismatch");
  if (!(c > 0.0 && c < 1.0))
    throw input_error("round_crs_packing: scaling constant must lie in (0, 1)");

  const int delta = std::max(1, instance.max_column_support());
  const std::uint64_t s = derive_seed(seed, "round/crs");

  Subset sampled(f.n());
  for (int i = 0; i < f.n(); ++i) {
    double p = c * std::clamp(x[static_cast<std::size_t>(i)], 0.0, 1.0) / delta;
    if (to_unit(mix64(s, static_cast<std::uint64_t>(i))) < p) sampled.add(i);
  }

  // Alteration: each constraint independently scans its sampled items in
  // increasing index order and rejects anything that would overflow it.
  std::vector<char> rejected(static_cast<std::size_t>(f.n()), 0);
  for (int i = 0; i < instance.m; ++i) {
    double load = 0;
    for (const auto& [j, v] : instance.rows[static_cast<std::size_t>(i)]) {
      if (!sampled.contains(j)) continue;
      if (load + v <= 1.0 + 1e-15) {
        load += v;
      } else {
        rejected[static_cast<std::size_t>(j)] = 1;
      }
    }
  }

  Subset chosen(f.n());
  for (int j : sampled.indices())
    if (!rejected[static_cast<std::size_t>(j)]) chosen.add(j);

  RoundingOutcome out;
  out.feasible = instance.max_load(indicator(chosen)) <= 1.0 + 1e-12;
  out.value = counted_value(f, chosen);
  out.chosen = std::move(chosen);
  out.seed = seed;
  return out;
}

}  // namespace submax
