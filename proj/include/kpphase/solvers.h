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

// Exact decision procedures for normalized knapsack instances.
//
// A subset S of the items is a solution at (c, p) when
//   sum_{i in S} w_i <= c * sum_i w_i   and   sum_{i in S} v_i >= p * sum_i v_i.
// The empty set is a legal knapsack, so every instance is solvable at p = 0.
//
// Item indices are 0-based everywhere in the API; format_witness() renders
// them 1-based for output.

#ifndef KPPHASE_SOLVERS_H_
#define KPPHASE_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kpphase/instance.h"

namespace kpphase {

// Exhaustive procedures refuse instances with more items than this.
inline constexpr std::size_t kMaxExhaustiveItems = 25;

struct SolveOutcome {
  bool solvable = false;
  // Sorted item indices; present exactly when solvable.
  std::optional<std::vector<std::size_t>> witness;
  std::uint64_t nodes_explored = 0;
  std::optional<std::uint64_t> elapsed_micros;
};

// Search stopped because the node budget ran out. Never a guess.
struct Unknown {
  std::uint64_t nodes_explored = 0;
  std::optional<std::uint64_t> elapsed_micros;
};

using Decision = std::variant<SolveOutcome, Unknown>;

inline bool is_unknown(const Decision& d) { return std::holds_alternative<Unknown>(d); }
inline bool is_solvable(const Decision& d) {
  const auto* o = std::get_if<SolveOutcome>(&d);
  return o != nullptr && o->solvable;
}
std::uint64_t nodes_explored(const Decision& d);

enum class Verdict : std::uint8_t { kUnsolvable = 0, kSolvable = 1, kUnknown = 2 };
Verdict verdict(const Decision& d);

// "{1,4}" for 0-based items {0, 3}.
std::string format_witness(std::span<const std::size_t> items);

// Checks a witness against the exact constraints.
bool verify_witness(const Instance& inst, const ConstraintPair& cp,
                    std::span<const std::size_t> items);

// ---------------------------------------------------------------------------
// Exhaustive lattice enumeration.

// Weight and value of every subset, split into two halves so that subset
// `mask` costs one addition: mask = (high << low_bits) | low.
class SubsetTable {
 public:
  // Throws std::length_error when inst has more than kMaxExhaustiveItems.
  explicit SubsetTable(const Instance& inst);

  std::size_t items() const { return items_; }
  std::uint64_t subsets() const { return std::uint64_t{1} << items_; }

  // Calls visit(mask, weight, value) for every subset in increasing mask
  // order; stops early when visit returns false.
  template <typename Visitor>
  void for_each(Visitor&& visit) const {
    const std::size_t lows = low_weight_.size();
    for (std::size_t hi = 0; hi < high_weight_.size(); ++hi) {
      const std::int64_t hw = high_weight_[hi];
      const std::int64_t hv = high_value_[hi];
      const std::uint64_t base = static_cast<std::uint64_t>(hi) << low_bits_;
      for (std::size_t lo = 0; lo < lows; ++lo) {
        if (!visit(base | lo, hw + low_weight_[lo], hv + low_value_[lo])) return;
      }
    }
  }

 private:
  std::size_t items_;
  std::size_t low_bits_;
  std::vector<std::int64_t> low_weight_, low_value_;
  std::vector<std::int64_t> high_weight_, high_value_;
};

struct LatticeCensus {
  std::uint64_t n_cap = 0;     // capacity-feasible subsets
  std::uint64_t n_profit = 0;  // profit-feasible subsets
  std::uint64_t n_both = 0;    // solutions

  friend bool operator==(const LatticeCensus&, const LatticeCensus&) = default;
};

// Witness is the first solution in subset-mask order; nodes_explored = 2^n.
// Throws std::length_error for n > kMaxExhaustiveItems.
SolveOutcome brute_force_decide(const Instance& inst, const ConstraintPair& cp);

// Exact counts over all 2^n subsets, the empty set included.
LatticeCensus lattice_census(const Instance& inst, const ConstraintPair& cp);
LatticeCensus lattice_census(const SubsetTable& table, const Thresholds& t);

// ---------------------------------------------------------------------------
// Branch and bound.

struct DensityItem {
  std::int64_t weight = 0;
  std::int64_t value = 0;
  std::size_t index = 0;
};

// Items by non-increasing value/weight, ties by original index.
std::vector<DensityItem> density_order(const Instance& inst);

// Fractional relaxation: whole items in order while they fit, then the
// fitting fraction of the first one that does not. Items must be sorted by
// non-increasing density (std::invalid_argument otherwise).
Ratio dantzig_bound(std::span<const DensityItem> sorted_items, const Ratio& capacity);

// Depth-first search over include/exclude decisions in density order,
// "include" first. A node is pruned when the Dantzig bound of the remaining
// items cannot lift the current value to the profit target; an item is only
// included when it fits. When the whole-item part of that relaxation already
// reaches the target it is taken as the completion, so the search stops at
// the first solution without walking it item by item.
//
// nodes_explored counts every visited decision node including the root, so
// it is a deterministic effort measure.
//
// The item order is prepared once, so one object can decide the same
// instance at many constraint pairs.
class BranchAndBound {
 public:
  explicit BranchAndBound(const Instance& inst);

  Decision decide(const Thresholds& t, std::optional<std::uint64_t> node_budget = {}) const;

  std::span<const DensityItem> items() const { return items_; }

 private:
  std::vector<DensityItem> items_;
  std::vector<std::int64_t> prefix_weight_;  // size n + 1
  std::vector<std::int64_t> prefix_value_;
};

Decision branch_and_bound_decide(const Instance& inst, const ConstraintPair& cp,
                                 std::optional<std::uint64_t> node_budget = {});

// ---------------------------------------------------------------------------
// Prefix checks: take items in a fixed order and stop at the last prefix
// that still fits.

struct PrefixResult {
  // Largest s with prefix weight within capacity (0 <= s_star <= n).
  std::size_t s_star = 0;
  // Whether the prefix of size s_star meets the profit target. Prefix values
  // only grow, so this is "some prefix is a solution".
  bool profit_met = false;
  // Smallest s whose prefix value meets the profit target, if any.
  std::optional<std::size_t> first_profit_s;
};

// `order` is a 0-based permutation of the items (std::invalid_argument
// otherwise).
PrefixResult prefix_feasible(const Instance& inst, std::span<const std::size_t> order,
                             const ConstraintPair& cp);

// Items by ascending weight, ties by original index.
std::vector<std::size_t> weight_greedy_order(const Instance& inst);

PrefixResult weight_greedy_feasible(const Instance& inst, const ConstraintPair& cp);

// Prefix sums for one fixed order, reusable across constraint pairs.
class PrefixScanner {
 public:
  PrefixScanner(const Instance& inst, std::span<const std::size_t> order);

  PrefixResult scan(const Thresholds& t) const;

 private:
  std::vector<std::int64_t> prefix_weight_;  // size n + 1, starts at 0
  std::vector<std::int64_t> prefix_value_;
};

}  // namespace kpphase

#endif  // KPPHASE_SOLVERS_H_
