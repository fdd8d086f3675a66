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
#include <numeric>
#include <stdexcept>

#include "kpphase/solvers.h"

namespace kpphase {

PrefixScanner::PrefixScanner(const Instance& inst, std::span<const std::size_t> order) {
  const std::size_t n = inst.size();
  if (order.size() != n) throw std::invalid_argument("prefix order: wrong length");
  std::vector<bool> seen(n, false);
  prefix_weight_.assign(n + 1, 0);
  prefix_value_.assign(n + 1, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t i = order[s];
    if (i >= n || seen[i]) throw std::invalid_argument("prefix order: not a permutation");
    seen[i] = true;
    prefix_weight_[s + 1] = prefix_weight_[s] + inst.weights()[i];
    prefix_value_[s + 1] = prefix_value_[s] + inst.values()[i];
  }
}

PrefixResult PrefixScanner::scan(const Thresholds& t) const {
  // Prefix sums are strictly increasing, so both searches are binary. There is
  // no sentinel item: s_star is capped at n.
  PrefixResult r;
  const auto fit = std::upper_bound(prefix_weight_.begin(), prefix_weight_.end(),
                                    t.weight_limit());
  r.s_star = static_cast<std::size_t>(fit - prefix_weight_.begin()) - 1;
  const auto pay = std::lower_bound(prefix_value_.begin(), prefix_value_.end(),
                                    t.profit_target());
  if (pay != prefix_value_.end()) {
    r.first_profit_s = static_cast<std::size_t>(pay - prefix_value_.begin());
  }
  r.profit_met = r.first_profit_s.has_value() && *r.first_profit_s <= r.s_star;
  return r;
}

PrefixResult prefix_feasible(const Instance& inst, std::span<const std::size_t> order,
                             const ConstraintPair& cp) {
  return PrefixScanner(inst, order).scan(effective_thresholds(inst, cp));
}

std::vector<std::size_t> weight_greedy_order(const Instance& inst) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.weights()[a] < inst.weights()[b];
  });
  return order;
}

PrefixResult weight_greedy_feasible(const Instance& inst, const ConstraintPair& cp) {
  return prefix_feasible(inst, weight_greedy_order(inst), cp);
}

}  // namespace kpphase
