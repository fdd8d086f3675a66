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
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kpphase/parallel.h"
#include "kpphase/sweep.h"

namespace kpphase {

void GridConfig::validate() const {
  model.validate();
  if (step.is_zero() || step > Ratio(1) || step.numerator() != 1) {
    throw std::invalid_argument("GridConfig: step must be 1/k for a positive integer k, got " +
                                step.to_string());
  }
  if (trials_per_cell < 1) throw std::invalid_argument("GridConfig: trials must be >= 1");
  if (node_budget && *node_budget == 0) {
    throw std::invalid_argument("GridConfig: node budget must be positive");
  }
}

std::vector<Ratio> grid_axis(const Ratio& step) {
  if (step.is_zero() || step.numerator() != 1) {
    throw std::invalid_argument("grid_axis: step must be 1/k");
  }
  const std::uint64_t k = step.denominator();
  std::vector<Ratio> axis;
  axis.reserve(k + 1);
  for (std::uint64_t i = 0; i <= k; ++i) axis.emplace_back(i, k);
  return axis;
}

double median(std::vector<double> xs) {
  if (xs.empty()) return std::nan("");
  const std::size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid), xs.end());
  const double upper = xs[mid];
  if (xs.size() % 2 == 1) return upper;
  const double lower = *std::max_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2.0;
}

ProbabilityGrid::ProbabilityGrid(std::size_t n, std::vector<Ratio> axis,
                                 std::vector<GridCell> cells, std::vector<Verdict> verdicts)
    : n_(n), axis_(std::move(axis)), cells_(std::move(cells)), verdicts_(std::move(verdicts)) {
  if (cells_.size() != axis_.size() * axis_.size()) {
    throw std::invalid_argument("ProbabilityGrid: cell count does not match axis");
  }
  if (!verdicts_.empty() && !cells_.empty() &&
      verdicts_.size() != cells_.size() * cells_.front().trials) {
    throw std::invalid_argument("ProbabilityGrid: verdict table has wrong size");
  }
}

const GridCell& ProbabilityGrid::at(std::size_t ci, std::size_t pi) const {
  if (ci >= points() || pi >= points()) throw std::out_of_range("ProbabilityGrid::at");
  return cells_[index(ci, pi)];
}

std::uint64_t ProbabilityGrid::trials() const {
  return cells_.empty() ? 0 : cells_.front().trials;
}

Verdict ProbabilityGrid::trial_verdict(std::size_t ci, std::size_t pi, std::uint64_t t) const {
  if (verdicts_.empty()) throw std::logic_error("ProbabilityGrid: no per-trial verdicts");
  if (t >= trials()) throw std::out_of_range("ProbabilityGrid::trial_verdict");
  return verdicts_[index(ci, pi) * trials() + t];
}

ProbabilityGrid run_grid(const GridConfig& config) {
  config.validate();
  const std::vector<Ratio> axis = grid_axis(config.step);
  const std::size_t k = axis.size();
  const std::size_t cells = k * k;
  const std::uint64_t trials = config.trials_per_cell;

  std::vector<ConstraintPair> pairs;
  pairs.reserve(cells);
  for (const Ratio& c : axis) {
    for (const Ratio& p : axis) pairs.emplace_back(c, p);
  }

  // [cell][trial] tables, filled one trial (one sampled combination) at a time.
  std::vector<Verdict> verdicts(cells * trials);
  std::vector<std::uint64_t> nodes(cells * trials);
  std::vector<std::uint64_t> micros(config.record_time ? cells * trials : 0);
  std::vector<std::uint8_t> el(config.include_bounds ? cells * trials : 0);
  std::vector<std::uint8_t> eL(config.include_bounds ? cells * trials : 0);

  std::vector<std::size_t> identity(config.model.n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});

  parallel_for(trials, config.threads, [&](std::size_t t) {
    const Instance inst = sample_instance(config.model, t);
    const BranchAndBound solver(inst);
    std::optional<PrefixScanner> sampled, greedy;
    if (config.include_bounds) {
      sampled.emplace(inst, identity);
      greedy.emplace(inst, weight_greedy_order(inst));
    }
    for (std::size_t cell = 0; cell < cells; ++cell) {
      const Thresholds th = effective_thresholds(inst, pairs[cell]);
      const Decision d = solver.decide(th, config.node_budget);
      const std::size_t slot = cell * trials + t;
      verdicts[slot] = verdict(d);
      nodes[slot] = nodes_explored(d);
      if (config.record_time) {
        micros[slot] = std::visit([](const auto& r) { return r.elapsed_micros.value_or(0); }, d);
      }
      if (config.include_bounds) {
        el[slot] = sampled->scan(th).profit_met;
        eL[slot] = greedy->scan(th).profit_met;
      }
    }
  });

  std::vector<GridCell> out(cells);
  std::vector<double> cell_nodes(trials);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    GridCell& gc = out[cell];
    gc.c = pairs[cell].c();
    gc.p = pairs[cell].p();
    gc.trials = trials;
    std::uint64_t node_sum = 0, el_count = 0, eL_count = 0, micro_sum = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const std::size_t slot = cell * trials + t;
      gc.solvable += verdicts[slot] == Verdict::kSolvable;
      gc.unknown += verdicts[slot] == Verdict::kUnknown;
      node_sum += nodes[slot];
      gc.nodes_max = std::max(gc.nodes_max, nodes[slot]);
      cell_nodes[t] = static_cast<double>(nodes[slot]);
      if (config.include_bounds && verdicts[slot] != Verdict::kUnknown) {
        el_count += el[slot];
        eL_count += eL[slot];
      }
      if (config.record_time) micro_sum += micros[slot];
    }
    const std::uint64_t decided = trials - gc.unknown;
    const double denom = static_cast<double>(decided);
    gc.probability = decided ? static_cast<double>(gc.solvable) / denom : std::nan("");
    gc.nodes_mean = static_cast<double>(node_sum) / static_cast<double>(trials);
    gc.nodes_median = median(cell_nodes);
    if (config.include_bounds) {
      gc.p_El = decided ? static_cast<double>(el_count) / denom : std::nan("");
      gc.p_EL = decided ? static_cast<double>(eL_count) / denom : std::nan("");
    }
    if (config.record_time) {
      gc.time_us_mean = static_cast<double>(micro_sum) / static_cast<double>(trials);
    }
  }
  return ProbabilityGrid(config.model.n, axis, std::move(out), std::move(verdicts));
}

}  // namespace kpphase
