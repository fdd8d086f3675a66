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

#include "kpphase/csv.h"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kpphase {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

void write_grid_csv(std::ostream& out, const ProbabilityGrid& grid) {
  const auto cells = grid.cells();
  const bool bounds = !cells.empty() && cells.front().p_El.has_value();
  const bool timing = !cells.empty() && cells.front().time_us_mean.has_value();
  out << "n,c,p,trials,solvable,unknown,probability,nodes_mean,nodes_median,nodes_max";
  if (bounds) out << ",p_El,p_EL";
  if (timing) out << ",time_us_mean";
  out << '\n';
  for (const GridCell& cell : cells) {
    out << grid.n() << ',' << cell.c.to_decimal() << ',' << cell.p.to_decimal() << ','
        << cell.trials << ',' << cell.solvable << ',' << cell.unknown << ','
        << format_real(cell.probability) << ',' << format_real(cell.nodes_mean) << ','
        << format_real(cell.nodes_median) << ',' << cell.nodes_max;
    if (bounds) out << ',' << format_real(*cell.p_El) << ',' << format_real(*cell.p_EL);
    if (timing) out << ',' << format_real(*cell.time_us_mean);
    out << '\n';
  }
}

void write_ratio_csv(std::ostream& out, const RatioProjection& projection) {
  out << "log_ratio,probability,nodes_median\n";
  for (const RatioRow& row : projection.rows) {
    out << format_real(row.log_ratio) << ',' << format_real(row.probability) << ','
        << format_real(row.nodes_median) << '\n';
  }
}

void write_isoquant_csv(std::ostream& out, const std::vector<Isoquant>& isoquants) {
  out << "level,c,p\n";
  for (const Isoquant& iso : isoquants) {
    for (const IsoquantPoint& pt : iso.points) {
      out << format_real(iso.level) << ',' << pt.c.to_decimal() << ',' << format_real(pt.p)
          << '\n';
    }
  }
}

void write_kappa_csv(std::ostream& out, const std::vector<KappaEstimate>& rows) {
  out << "n,c,p,trials,expected_solutions,kappa\n";
  for (const KappaEstimate& k : rows) {
    out << k.n << ',' << k.cp.c().to_decimal() << ',' << k.cp.p().to_decimal() << ','
        << k.trials << ',' << format_real(k.expected_solutions) << ',' << format_real(k.kappa)
        << '\n';
  }
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundsRow>& rows) {
  out << "n,c,p,trials,p_E,p_El,p_EL,se_E,se_El,se_EL,unknown_count\n";
  for (const BoundsRow& r : rows) {
    const EventEstimate& e = r.estimate;
    out << r.n << ',' << r.cp.c().to_decimal() << ',' << r.cp.p().to_decimal() << ','
        << e.trials << ',' << format_real(e.p_E) << ',' << format_real(e.p_El) << ','
        << format_real(e.p_EL) << ',' << format_real(e.stderr_E) << ','
        << format_real(e.stderr_El) << ',' << format_real(e.stderr_EL) << ','
        << e.unknown_count << '\n';
  }
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("CSV column '" + name + "' not found");
}

CsvTable read_csv(std::istream& in) {
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("CSV: missing header");
  table.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto row = split(line);
    if (row.size() != table.header.size()) {
      throw std::invalid_argument("CSV: row has " + std::to_string(row.size()) +
                                  " cells, header has " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace kpphase
