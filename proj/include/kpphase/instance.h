// Copyright 2026 The kpphase Authors
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

#ifndef KPPHASE_INSTANCE_H_
#define KPPHASE_INSTANCE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "kpphase/ratio.h"

namespace kpphase {

// Raw item data of a 0-1 knapsack decision instance. The capacity and profit
// constraints are not part of the instance; they are supplied separately in
// normalized form (ConstraintPair) so that one sampled combination can be
// decided at many (c, p) points.
class Instance {
 public:
  // Throws std::invalid_argument unless both sequences have the same
  // non-zero length and every entry is >= 1.
  Instance(std::vector<std::int64_t> weights, std::vector<std::int64_t> values);

  std::size_t size() const { return weights_.size(); }
  std::span<const std::int64_t> weights() const { return weights_; }
  std::span<const std::int64_t> values() const { return values_; }
  std::int64_t total_weight() const { return total_weight_; }
  std::int64_t total_value() const { return total_value_; }

  // Text format: line 1 `n`, line 2 weights, line 3 values.
  static Instance read(std::istream& in);
  static Instance load(const std::filesystem::path& path);
  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> values_;
  std::int64_t total_weight_ = 0;
  std::int64_t total_value_ = 0;
};

// Normalized capacity c and normalized profit p, both exact and in [0, 1].
class ConstraintPair {
 public:
  // Throws std::domain_error if c or p exceeds 1.
  ConstraintPair(Ratio c, Ratio p);

  const Ratio& c() const { return c_; }
  const Ratio& p() const { return p_; }

  // c / p; empty when p == 0.
  std::optional<Ratio> ratio() const;

  friend bool operator==(const ConstraintPair&, const ConstraintPair&) = default;

 private:
  Ratio c_;
  Ratio p_;
};

// The smallest profit level that every instance with n items can meet with a
// single item.
Ratio min_profit(std::size_t n);

// y / sum(parts). Throws std::domain_error when parts is empty or y exceeds
// the sum.
Ratio normalize(std::uint64_t y, std::span<const std::int64_t> parts);

// Raw-unit constraints c * total_weight and p * total_value.
//
// Subset sums are integers, so "sum <= weight_cap" is the same as
// "sum <= floor(weight_cap)" and "sum >= profit_floor" the same as
// "sum >= ceil(profit_floor)". The integer forms are what the solvers use.
struct Thresholds {
  Ratio weight_cap;
  Ratio profit_floor;

  std::int64_t weight_limit() const { return static_cast<std::int64_t>(weight_cap.floor()); }
  std::int64_t profit_target() const { return static_cast<std::int64_t>(profit_floor.ceil()); }

  bool admits(std::int64_t weight, std::int64_t value) const {
    return weight <= weight_limit() && value >= profit_target();
  }
};

Thresholds effective_thresholds(const Instance& inst, const ConstraintPair& cp);

// Sum of weights and values of the items at the given 0-based indices.
struct SubsetTotals {
  std::int64_t weight = 0;
  std::int64_t value = 0;
};
SubsetTotals subset_totals(const Instance& inst, std::span<const std::size_t> items);

}  // namespace kpphase

#endif  // KPPHASE_INSTANCE_H_
