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

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "kpphase/solvers.h"

namespace kpphase {

namespace {

using i128 = __int128;

// a.value / a.weight > b.value / b.weight, ties by index.
bool denser(const DensityItem& a, const DensityItem& b) {
  const i128 lhs = static_cast<i128>(a.value) * b.weight;
  const i128 rhs = static_cast<i128>(b.value) * a.weight;
  if (lhs != rhs) return lhs > rhs;
  return a.index < b.index;
}

enum class Status { kFailed, kFound, kExhausted };

class Search {
 public:
  Search(std::span<const DensityItem> items, std::span<const std::int64_t> prefix_weight,
         std::span<const std::int64_t> prefix_value, std::int64_t cap, std::int64_t target,
         std::optional<std::uint64_t> budget)
      : items_(items),
        prefix_weight_(prefix_weight),
        prefix_value_(prefix_value),
        cap_(cap),
        target_(target),
        budget_(budget) {}

  Status run() { return visit(0, 0, 0); }

  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::size_t> witness() const {
    std::vector<std::size_t> w = chosen_;
    std::sort(w.begin(), w.end());
    return w;
  }

 private:
  enum class Relaxation { kPrune, kBranch, kGreedyWitness };

  // Dantzig relaxation of items [depth, n) with integer capacity `room`
  // against the remaining requirement `need`. Sets `greedy_end_` to one past
  // the last whole item that fits.
  Relaxation relax(std::size_t depth, std::int64_t room, std::int64_t need) {
    const std::int64_t base_w = prefix_weight_[depth];
    const auto first = prefix_weight_.begin() + static_cast<std::ptrdiff_t>(depth);
    const auto it = std::upper_bound(first, prefix_weight_.end(), base_w + room);
    const auto k = static_cast<std::size_t>(it - prefix_weight_.begin()) - 1;
    greedy_end_ = k;
    const std::int64_t whole = prefix_value_[k] - prefix_value_[depth];
    if (whole >= need) return Relaxation::kGreedyWitness;
    if (k == items_.size()) return Relaxation::kPrune;
    const DensityItem& next = items_[k];
    const std::int64_t residual = room - (prefix_weight_[k] - base_w);
    const bool reaches =
        static_cast<i128>(whole) * next.weight + static_cast<i128>(next.value) * residual >=
        static_cast<i128>(need) * next.weight;
    return reaches ? Relaxation::kBranch : Relaxation::kPrune;
  }

  Status visit(std::size_t depth, std::int64_t weight, std::int64_t value) {
    if (budget_ && nodes_ >= *budget_) return Status::kExhausted;
    ++nodes_;
    if (value >= target_) return Status::kFound;
    if (depth == items_.size()) return Status::kFailed;
    switch (relax(depth, cap_ - weight, target_ - value)) {
      case Relaxation::kPrune:
        return Status::kFailed;
      case Relaxation::kGreedyWitness:
        // The whole-item part of the relaxation is itself a feasible completion.
        for (std::size_t i = depth; i < greedy_end_; ++i) chosen_.push_back(items_[i].index);
        return Status::kFound;
      case Relaxation::kBranch:
        break;
    }

    const DensityItem& item = items_[depth];
    if (weight + item.weight <= cap_) {
      chosen_.push_back(item.index);
      const Status s = visit(depth + 1, weight + item.weight, value + item.value);
      if (s != Status::kFailed) return s;
      chosen_.pop_back();
    }
    return visit(depth + 1, weight, value);
  }

  std::span<const DensityItem> items_;
  std::span<const std::int64_t> prefix_weight_;
  std::span<const std::int64_t> prefix_value_;
  std::int64_t cap_;
  std::int64_t target_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
  std::size_t greedy_end_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::vector<DensityItem> density_order(const Instance& inst) {
  std::vector<DensityItem> items(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    items[i] = DensityItem{inst.weights()[i], inst.values()[i], i};
  }
  std::sort(items.begin(), items.end(), denser);
  return items;
}

Ratio dantzig_bound(std::span<const DensityItem> sorted_items, const Ratio& capacity) {
  for (std::size_t i = 1; i < sorted_items.size(); ++i) {
    const auto& a = sorted_items[i - 1];
    const auto& b = sorted_items[i];
    if (static_cast<i128>(a.value) * b.weight < static_cast<i128>(b.value) * a.weight) {
      throw std::invalid_argument("dantzig_bound: items not sorted by density");
    }
  }
  Ratio room = capacity;
  std::uint64_t whole = 0;
  for (const DensityItem& item : sorted_items) {
    const Ratio w(static_cast<std::uint64_t>(item.weight));
    if (w <= room) {
      whole += static_cast<std::uint64_t>(item.value);
      room = room - w;
      continue;
    }
    return Ratio(whole) + room * Ratio(static_cast<std::uint64_t>(item.value),
                                       static_cast<std::uint64_t>(item.weight));
  }
  return Ratio(whole);
}

BranchAndBound::BranchAndBound(const Instance& inst) : items_(density_order(inst)) {
  prefix_weight_.assign(items_.size() + 1, 0);
  prefix_value_.assign(items_.size() + 1, 0);
  for (std::size_t i = 0; i < items_.size(); ++i) {
    prefix_weight_[i + 1] = prefix_weight_[i] + items_[i].weight;
    prefix_value_[i + 1] = prefix_value_[i] + items_[i].value;
  }
}

Decision BranchAndBound::decide(const Thresholds& t,
                                std::optional<std::uint64_t> node_budget) const {
  if (node_budget && *node_budget == 0) {
    throw std::invalid_argument("BranchAndBound: node budget must be positive");
  }
  const auto start = std::chrono::steady_clock::now();
  Search search(items_, prefix_weight_, prefix_value_, t.weight_limit(), t.profit_target(),
                node_budget);
  const Status status = search.run();
  const auto micros = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  if (status == Status::kExhausted) return Unknown{search.nodes(), micros};
  SolveOutcome out;
  out.solvable = status == Status::kFound;
  if (out.solvable) out.witness = search.witness();
  out.nodes_explored = search.nodes();
  out.elapsed_micros = micros;
  return out;
}

Decision branch_and_bound_decide(const Instance& inst, const ConstraintPair& cp,
                                 std::optional<std::uint64_t> node_budget) {
  return BranchAndBound(inst).decide(effective_thresholds(inst, cp), node_budget);
}

}  // namespace kpphase
