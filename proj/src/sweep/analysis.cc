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
#include <stdexcept>

#include "kpphase/sweep.h"

namespace kpphase {

RatioProjection ratio_projection(const ProbabilityGrid& grid) {
  RatioProjection out;
  for (const GridCell& cell : grid.cells()) {
    if (cell.c.is_zero() || cell.p.is_zero()) {
      ++out.skipped;
      continue;
    }
    const Ratio r = cell.c / cell.p;
    RatioRow row;
    row.c = cell.c;
    row.p = cell.p;
    row.log_ratio = r == Ratio(1) ? 0.0 : std::log(r.to_double());
    row.probability = cell.probability;
    row.nodes_median = cell.nodes_median;
    out.rows.push_back(row);
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const RatioRow& a, const RatioRow& b) {
    const Ratio ra = a.c / a.p;
    const Ratio rb = b.c / b.p;
    if (ra != rb) return ra < rb;
    return a.c < b.c;
  });
  return out;
}

std::optional<double> ratio_crossing(const RatioProjection& projection, double level) {
  struct Point {
    Ratio ratio;
    double log_ratio;
    double sum;
    int count;
  };
  std::vector<Point> points;
  for (const RatioRow& row : projection.rows) {
    if (std::isnan(row.probability)) continue;
    const Ratio r = row.c / row.p;
    if (!points.empty() && points.back().ratio == r) {
      points.back().sum += row.probability;
      ++points.back().count;
    } else {
      points.push_back(Point{r, row.log_ratio, row.probability, 1});
    }
  }
  for (std::size_t i = points.size(); i-- > 0;) {
    const double prob = points[i].sum / points[i].count;
    if (prob >= level) continue;
    if (i + 1 == points.size()) return std::nullopt;
    const double right = points[i + 1].sum / points[i + 1].count;
    const double frac = (right - level) / (right - prob);
    return points[i + 1].log_ratio + frac * (points[i].log_ratio - points[i + 1].log_ratio);
  }
  return std::nullopt;
}

Isoquant extract_isoquant(const ProbabilityGrid& grid, double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("extract_isoquant: level must lie in (0, 1)");
  }
  Isoquant iso;
  iso.level = level;
  const std::size_t k = grid.points();
  for (std::size_t ci = 0; ci < k; ++ci) {
    for (std::size_t pi = 1; pi < k; ++pi) {
      const double below = grid.at(ci, pi - 1).probability;
      const double above = grid.at(ci, pi).probability;
      if (std::isnan(below) || std::isnan(above)) continue;
      if (below >= level && above < level) {
        const double p0 = grid.axis()[pi - 1].to_double();
        const double p1 = grid.axis()[pi].to_double();
        iso.points.push_back({grid.axis()[ci], p0 + (below - level) / (below - above) * (p1 - p0)});
        break;
      }
    }
  }
  return iso;
}

HardnessSummary hardness_summary(const ProbabilityGrid& grid) {
  HardnessSummary s;
  const auto cells = grid.cells();
  if (cells.empty()) throw std::invalid_argument("hardness_summary: empty grid");
  std::vector<double> band, outside;
  double band_sum = 0.0;
  double outside_sum = 0.0;
  s.in_band.resize(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const GridCell& best = cells[s.argmax_cell];
    if (cells[i].nodes_median > best.nodes_median ||
        (cells[i].nodes_median == best.nodes_median && cells[i].nodes_mean > best.nodes_mean)) {
      s.argmax_cell = i;
    }
    const double prob = cells[i].probability;
    s.in_band[i] = prob > kBandLow && prob < kBandHigh;
    (s.in_band[i] ? band : outside).push_back(cells[i].nodes_median);
    (s.in_band[i] ? band_sum : outside_sum) += cells[i].nodes_mean;
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  s.band_nodes_mean = band.empty() ? nan : band_sum / static_cast<double>(band.size());
  s.outside_nodes_mean = outside.empty() ? nan : outside_sum / static_cast<double>(outside.size());
  s.argmax_c = cells[s.argmax_cell].c;
  s.argmax_p = cells[s.argmax_cell].p;
  s.band_cells = band.size();
  s.band_nodes_median = median(std::move(band));
  s.outside_nodes_median = median(std::move(outside));
  return s;
}

}  // namespace kpphase
