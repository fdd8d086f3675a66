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

#include <chrono>
#include <stdexcept>
#include <string>

#include "kpphase/solvers.h"

namespace kpphase {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxExhaustiveItems) {
    throw std::length_error("exhaustive enumeration limited to " +
                            std::to_string(kMaxExhaustiveItems) + " items, got " +
                            std::to_string(n));
  }
}

// All subset sums of items [first, first + count).
void half_sums(const Instance& inst, std::size_t first, std::size_t count,
               std::vector<std::int64_t>& weights, std::vector<std::int64_t>& values) {
  const std::size_t size = std::size_t{1} << count;
  weights.assign(size, 0);
  values.assign(size, 0);
  for (std::size_t mask = 1; mask < size; ++mask) {
    const int bit = __builtin_ctzll(mask);
    const std::size_t rest = mask & (mask - 1);
    weights[mask] = weights[rest] + inst.weights()[first + static_cast<std::size_t>(bit)];
    values[mask] = values[rest] + inst.values()[first + static_cast<std::size_t>(bit)];
  }
}

}  // namespace

std::uint64_t nodes_explored(const Decision& d) {
  return std::visit([](const auto& r) { return r.nodes_explored; }, d);
}

Verdict verdict(const Decision& d) {
  if (is_unknown(d)) return Verdict::kUnknown;
  return is_solvable(d) ? Verdict::kSolvable : Verdict::kUnsolvable;
}

std::string format_witness(std::span<const std::size_t> items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(items[i] + 1);
  }
  return out + "}";
}

bool verify_witness(const Instance& inst, const ConstraintPair& cp,
                    std::span<const std::size_t> items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i] <= items[i - 1]) return false;
  }
  const SubsetTotals totals = subset_totals(inst, items);
  const Thresholds t = effective_thresholds(inst, cp);
  return compare(t.weight_cap, static_cast<std::uint64_t>(totals.weight), 1) >= 0 &&
         compare(t.profit_floor, static_cast<std::uint64_t>(totals.value), 1) <= 0;
}

SubsetTable::SubsetTable(const Instance& inst) : items_(inst.size()) {
  check_size(items_);
  low_bits_ = items_ / 2;
  half_sums(inst, 0, low_bits_, low_weight_, low_value_);
  half_sums(inst, low_bits_, items_ - low_bits_, high_weight_, high_value_);
}

SolveOutcome brute_force_decide(const Instance& inst, const ConstraintPair& cp) {
  const auto start = std::chrono::steady_clock::now();
  const SubsetTable table(inst);
  const Thresholds t = effective_thresholds(inst, cp);
  const std::int64_t cap = t.weight_limit();
  const std::int64_t target = t.profit_target();

  SolveOutcome out;
  out.nodes_explored = table.subsets();
  table.for_each([&](std::uint64_t mask, std::int64_t w, std::int64_t v) {
    if (w <= cap && v >= target) {
      std::vector<std::size_t> items;
      for (std::size_t i = 0; i < table.items(); ++i) {
        if (mask >> i & 1) items.push_back(i);
      }
      out.solvable = true;
      out.witness = std::move(items);
      return false;
    }
    return true;
  });
  out.elapsed_micros = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  return out;
}

LatticeCensus lattice_census(const SubsetTable& table, const Thresholds& t) {
  const std::int64_t cap = t.weight_limit();
  const std::int64_t target = t.profit_target();
  LatticeCensus census;
  table.for_each([&](std::uint64_t, std::int64_t w, std::int64_t v) {
    const bool fits = w <= cap;
    const bool pays = v >= target;
    census.n_cap += fits;
    census.n_profit += pays;
    census.n_both += fits && pays;
    return true;
  });
  return census;
}

LatticeCensus lattice_census(const Instance& inst, const ConstraintPair& cp) {
  return lattice_census(SubsetTable(inst), effective_thresholds(inst, cp));
}

}  // namespace kpphase
