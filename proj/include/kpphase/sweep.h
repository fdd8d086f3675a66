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

// Grid experiments over normalized (c, p) space.
//
// Every cell of a grid decides the same sampled combinations: trial t of
// every cell uses sample_instance(model, t). Solvability is monotone in
// (c, p) for a fixed instance, so per-trial verdicts are exactly monotone
// across cells when no trial hits the node budget.

#ifndef KPPHASE_SWEEP_H_
#define KPPHASE_SWEEP_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kpphase/instance.h"
#include "kpphase/ratio.h"
#include "kpphase/sampling.h"
#include "kpphase/solvers.h"

namespace kpphase {

struct GridConfig {
  SamplingModel model;
  Ratio step{1, 25};
  std::uint64_t trials_per_cell = 200;
  std::optional<std::uint64_t> node_budget;
  // Also estimate P[E^l] and P[E^L] per cell.
  bool include_bounds = false;
  // Record mean wall time per cell. Not deterministic.
  bool record_time = false;
  unsigned threads = 1;

  // Throws std::invalid_argument unless step = 1/k for a positive integer k
  // and trials_per_cell >= 1.
  void validate() const;
};

// {0, step, 2 step, ..., 1}
std::vector<Ratio> grid_axis(const Ratio& step);

struct GridCell {
  Ratio c;
  Ratio p;
  std::uint64_t trials = 0;
  std::uint64_t solvable = 0;
  std::uint64_t unknown = 0;
  // solvable / (trials - unknown); NaN when every trial was unknown.
  double probability = 0.0;
  double nodes_mean = 0.0;
  double nodes_median = 0.0;
  std::uint64_t nodes_max = 0;
  std::optional<double> p_El;
  std::optional<double> p_EL;
  std::optional<double> time_us_mean;
};

// Cells in c-major order: cell (ci, pi) is cells()[ci * points() + pi].
class ProbabilityGrid {
 public:
  ProbabilityGrid(std::size_t n, std::vector<Ratio> axis, std::vector<GridCell> cells,
                  std::vector<Verdict> verdicts = {});

  std::size_t n() const { return n_; }
  const std::vector<Ratio>& axis() const { return axis_; }
  std::size_t points() const { return axis_.size(); }
  std::span<const GridCell> cells() const { return cells_; }
  const GridCell& at(std::size_t ci, std::size_t pi) const;
  std::size_t index(std::size_t ci, std::size_t pi) const { return ci * points() + pi; }

  bool has_trial_verdicts() const { return !verdicts_.empty(); }
  std::uint64_t trials() const;
  // Verdict of trial t at cell (ci, pi). Throws std::logic_error when the
  // grid was built without per-trial verdicts.
  Verdict trial_verdict(std::size_t ci, std::size_t pi, std::uint64_t t) const;

 private:
  std::size_t n_;
  std::vector<Ratio> axis_;
  std::vector<GridCell> cells_;
  std::vector<Verdict> verdicts_;  // [cell][trial]
};

ProbabilityGrid run_grid(const GridConfig& config);

// Median of a sample (mean of the two middle values for even sizes).
double median(std::vector<double> xs);

// ---------------------------------------------------------------------------

struct RatioRow {
  Ratio c;
  Ratio p;
  double log_ratio = 0.0;  // natural log of c / p
  double probability = 0.0;
  double nodes_median = 0.0;
};

struct RatioProjection {
  std::vector<RatioRow> rows;  // ascending log_ratio, then c
  std::size_t skipped = 0;     // cells with c = 0 or p = 0
};

RatioProjection ratio_projection(const ProbabilityGrid& grid);

// Where the probability-vs-log_ratio curve crosses `level`. Cells with the
// same exact ratio c/p are averaged into one point; the points are scanned
// from the largest log_ratio downwards and the first drop below `level` is
// linearly interpolated against its right neighbour. Empty when no point is
// below the level, or when the largest-ratio point already is.
std::optional<double> ratio_crossing(const RatioProjection& projection, double level = 0.5);

// ---------------------------------------------------------------------------

struct IsoquantPoint {
  Ratio c;
  double p = 0.0;
};

struct Isoquant {
  double level = 0.0;
  std::vector<IsoquantPoint> points;
};

// For each c column, scans p upwards and interpolates the first crossing
// from >= level to < level. Columns without a crossing are omitted.
// Throws std::invalid_argument unless 0 < level < 1.
Isoquant extract_isoquant(const ProbabilityGrid& grid, double level);

// ---------------------------------------------------------------------------

// Cells with probability strictly inside (kBandLow, kBandHigh) form the
// transition band.
inline constexpr double kBandLow = 0.05;
inline constexpr double kBandHigh = 0.95;

struct HardnessSummary {
  // Cell with the largest nodes_median; ties go to the larger nodes_mean,
  // then to the earlier cell.
  std::size_t argmax_cell = 0;
  Ratio argmax_c;
  Ratio argmax_p;
  std::vector<bool> in_band;  // per cell, grid order
  std::size_t band_cells = 0;
  // Median of per-cell nodes_median inside / outside the band; NaN if empty.
  double band_nodes_median = 0.0;
  double outside_nodes_median = 0.0;
  // Mean of per-cell nodes_mean inside / outside the band; NaN if empty.
  double band_nodes_mean = 0.0;
  double outside_nodes_mean = 0.0;
};

HardnessSummary hardness_summary(const ProbabilityGrid& grid);

// ---------------------------------------------------------------------------
// Constrainedness kappa = 1 - log2(E[Sol]) / N, N = log2 |S|.

// log2 of the number of subsets of n items.
double search_space_bits(std::size_t n);

struct KappaEstimate {
  std::size_t n = 0;
  ConstraintPair cp{Ratio(0), Ratio(0)};
  std::uint64_t trials = 0;
  double expected_solutions = 0.0;
  // +infinity when no trial has a solution.
  double kappa = 0.0;
  // Fraction of trials with at least one solution.
  double solvable_fraction = 0.0;
};

// Holds exhaustive subset tables for trials 0..trials-1 so that kappa can
// be evaluated at many constraint pairs on the same paired sample.
class KappaSampler {
 public:
  // Throws std::length_error when model.n > kMaxExhaustiveItems.
  KappaSampler(const SamplingModel& model, std::uint64_t trials, unsigned threads = 1);

  KappaEstimate estimate(const ConstraintPair& cp) const;

 private:
  SamplingModel model_;
  unsigned threads_;
  std::vector<Instance> instances_;
  std::vector<SubsetTable> tables_;
};

KappaEstimate kappa(const SamplingModel& model, const ConstraintPair& cp, std::uint64_t trials,
                    unsigned threads = 1);

// The kappa = 1 contour along the line p = c + delta for a fixed c, found by
// bisection over dyadic p in [0, 1]. kappa <= 1 at p_low and > 1 at p_high.
struct KappaContour {
  Ratio c;
  Ratio p_low;
  Ratio p_high;
  double delta = 0.0;  // midpoint of [p_low, p_high] minus c
  KappaEstimate at_low;
  KappaEstimate at_high;
};

KappaContour kappa_contour(const KappaSampler& sampler, const Ratio& c, int iterations = 12);

}  // namespace kpphase

#endif  // KPPHASE_SWEEP_H_
