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

#include "kpphase/sweep_config.h"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace kpphase {

namespace {

namespace pt = boost::property_tree;

std::uint64_t to_unsigned(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!text.empty() && text.front() == '-') throw std::invalid_argument("negative");
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: '" + key + "' expects a non-negative integer, got '" +
                                text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + text + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw std::invalid_argument("config: '" + key + "' expects a boolean, got '" + text + "'");
}

std::vector<double> to_levels(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("config: bad isoquant level '" + item + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size() || !(v > 0.0 && v < 1.0)) {
      throw std::invalid_argument("config: isoquant level must be in (0, 1), got '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("config: empty isoquant level list");
  return out;
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }

  const std::set<std::string> known = {
      "model.n",     "model.low",          "model.high",         "model.seed",
      "grid.step",   "grid.trials",        "grid.budget",        "grid.include_bounds",
      "grid.record_time", "isoquants.levels", "output.dir"};

  SweepConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty()) {
      throw std::invalid_argument("config: key '" + section + "' must be inside a section");
    }
    for (const auto& [key, node] : body) {
      const std::string full = section + "." + key;
      if (!known.contains(full)) throw std::invalid_argument("config: unknown key '" + full + "'");
      const std::string value = node.get_value<std::string>();
      if (full == "model.n") {
        cfg.grid.model.n = to_unsigned(full, value);
      } else if (full == "model.low") {
        cfg.grid.model.low = static_cast<std::int64_t>(to_unsigned(full, value));
      } else if (full == "model.high") {
        cfg.grid.model.high = static_cast<std::int64_t>(to_unsigned(full, value));
      } else if (full == "model.seed") {
        cfg.grid.model.master_seed = to_unsigned(full, value);
      } else if (full == "grid.step") {
        cfg.grid.step = Ratio::parse(value);
      } else if (full == "grid.trials") {
        cfg.grid.trials_per_cell = to_unsigned(full, value);
      } else if (full == "grid.budget") {
        cfg.grid.node_budget = to_unsigned(full, value);
      } else if (full == "grid.include_bounds") {
        cfg.grid.include_bounds = to_bool(full, value);
      } else if (full == "grid.record_time") {
        cfg.grid.record_time = to_bool(full, value);
      } else if (full == "isoquants.levels") {
        cfg.levels = to_levels(value);
      } else if (full == "output.dir") {
        cfg.out_dir = value;
      }
    }
  }
  cfg.grid.validate();
  return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  return parse_sweep_config(in);
}

}  // namespace kpphase
