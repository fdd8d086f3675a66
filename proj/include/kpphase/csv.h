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

// CSV artifacts. These are the only interchange format with the plotting
// scripts, so headers and number formatting are fixed:
//
//   grid      n,c,p,trials,solvable,unknown,probability,nodes_mean,
//             nodes_median,nodes_max[,p_El,p_EL][,time_us_mean]
//   ratio     log_ratio,probability,nodes_median
//   isoquant  level,c,p
//   kappa     n,c,p,trials,expected_solutions,kappa
//   bounds    n,c,p,trials,p_E,p_El,p_EL,se_E,se_El,se_EL,unknown_count
//
// Reals carry 6 fractional digits; c and p are rounded from their exact
// rationals; non-finite values print as "nan", "inf".

#ifndef KPPHASE_CSV_H_
#define KPPHASE_CSV_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "kpphase/bounds.h"
#include "kpphase/sweep.h"

namespace kpphase {

std::string format_real(double x);

void write_grid_csv(std::ostream& out, const ProbabilityGrid& grid);
void write_ratio_csv(std::ostream& out, const RatioProjection& projection);
void write_isoquant_csv(std::ostream& out, const std::vector<Isoquant>& isoquants);
void write_kappa_csv(std::ostream& out, const std::vector<KappaEstimate>& rows);

struct BoundsRow {
  std::size_t n = 0;
  ConstraintPair cp{Ratio(0), Ratio(0)};
  EventEstimate estimate;
};
void write_bounds_csv(std::ostream& out, const std::vector<BoundsRow>& rows);

// Minimal reader for the files above: header names plus string cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a column; throws std::out_of_range naming the column if absent.
  std::size_t column(const std::string& name) const;
};
CsvTable read_csv(std::istream& in);

}  // namespace kpphase

#endif  // KPPHASE_CSV_H_
