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

#include "cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "kpphase/bounds.h"
#include "kpphase/csv.h"
#include "kpphase/manifest.h"
#include "kpphase/sampling.h"
#include "kpphase/solvers.h"
#include "kpphase/sweep.h"
#include "kpphase/sweep_config.h"

namespace kpphase::cli {

namespace {

namespace fs = std::filesystem;

// Bad user input discovered after flag parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) {
      throw UsageError(std::string(kThreadsEnv) + " must be a positive integer, got '" + env +
                       "'");
    }
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ConstraintPair parse_pair(const std::string& c, const std::string& p) {
  try {
    return ConstraintPair(Ratio::parse(c), Ratio::parse(p));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

SamplingModel make_model(std::size_t n, std::int64_t low, std::int64_t high,
                         std::uint64_t seed) {
  SamplingModel model{n, low, high, seed};
  try {
    model.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return model;
}

// Writes `csv` to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& csv, std::ostream& out) {
  if (path.empty()) {
    out << csv;
    return;
  }
  if (const fs::path parent = fs::path(path).parent_path(); !parent.empty()) {
    fs::create_directories(parent);
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << csv;
}

struct Options {
  std::size_t n = 50;
  std::int64_t low = 1;
  std::int64_t high = 10'000'000;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::uint64_t count = 1;
  std::string c;
  std::string p;
  std::string solver = "bnb";
  std::optional<std::uint64_t> budget;
  std::optional<unsigned> threads;
  std::string out;
  std::string file;
  // Sweep overrides; unset means "keep the config file value".
  std::optional<std::size_t> sweep_n;
  std::optional<std::uint64_t> sweep_seed;
  std::optional<std::uint64_t> sweep_trials;
  std::optional<std::string> sweep_step;
  bool exclude_unknown = false;
};

int cmd_generate(const Options& o, std::ostream& out) {
  RunManifest manifest;
  manifest.started = std::chrono::system_clock::now();
  const SamplingModel model = make_model(o.n, o.low, o.high, o.seed);
  const fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
  fs::create_directories(dir);
  for (std::uint64_t i = 0; i < o.count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "instance_%06llu.txt", static_cast<unsigned long long>(i));
    sample_instance(model, i).save(dir / name);
    manifest.outputs.emplace_back(name);
  }
  manifest.command = "generate";
  manifest.seed = o.seed;
  manifest.config = {{"model", to_json(model)}, {"count", o.count}};
  manifest.finished = std::chrono::system_clock::now();
  manifest.save(dir / "manifest.json");
  out << "wrote " << o.count << " instance(s) to " << dir.string() << '\n';
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Instance inst = Instance::load(o.file);
  const ConstraintPair cp = parse_pair(o.c, o.p);
  const Thresholds th = effective_thresholds(inst, cp);

  Decision d;
  if (o.solver == "oracle") {
    if (inst.size() > kMaxExhaustiveItems) {
      throw UsageError("oracle solver supports at most " + std::to_string(kMaxExhaustiveItems) +
                       " items");
    }
    d = brute_force_decide(inst, cp);
  } else {
    d = BranchAndBound(inst).decide(th, o.budget);
  }

  out << "capacity: " << th.weight_cap.to_string() << " (c=" << cp.c().to_string() << ")\n"
      << "profit:   " << th.profit_floor.to_string() << " (p=" << cp.p().to_string() << ")\n";
  if (const auto* unknown = std::get_if<Unknown>(&d)) {
    out << "verdict:  unknown (node budget exhausted)\n"
        << "nodes:    " << unknown->nodes_explored << '\n';
    return kExitUnknown;
  }
  const auto& outcome = std::get<SolveOutcome>(d);
  out << "verdict:  " << (outcome.solvable ? "solvable" : "unsolvable") << '\n';
  if (outcome.witness) {
    const SubsetTotals totals = subset_totals(inst, *outcome.witness);
    out << "witness:  " << format_witness(*outcome.witness) << " weight=" << totals.weight
        << " value=" << totals.value << '\n';
  }
  out << "nodes:    " << outcome.nodes_explored << '\n';
  return outcome.solvable ? kExitSolvable : kExitUnsolvable;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  const Instance inst = Instance::load(o.file);
  if (inst.size() > kMaxExhaustiveItems) {
    throw UsageError("lattice supports at most " + std::to_string(kMaxExhaustiveItems) +
                     " items");
  }
  const LatticeCensus census = lattice_census(inst, parse_pair(o.c, o.p));
  out << census.n_cap << ' ' << census.n_profit << ' ' << census.n_both << '\n';
  return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  RunManifest manifest;
  manifest.started = std::chrono::system_clock::now();
  const SamplingModel model = make_model(o.n, o.low, o.high, o.seed);
  const ConstraintPair cp = parse_pair(o.c, o.p);
  EventOptions options;
  options.node_budget = o.budget;
  options.unknown_policy = o.exclude_unknown ? UnknownPolicy::kExclude : UnknownPolicy::kFail;
  options.threads = o.threads.value_or(default_threads());

  std::ostringstream csv;
  write_bounds_csv(csv, {BoundsRow{model.n, cp, estimate_event_probs(model, cp, o.trials, options)}});
  emit(o.out, csv.str(), out);

  if (!o.out.empty()) {
    manifest.command = "bounds";
    manifest.seed = o.seed;
    manifest.config = {{"model", to_json(model)},
                       {"c", cp.c().to_string()},
                       {"p", cp.p().to_string()},
                       {"trials", o.trials},
                       {"budget", o.budget ? nlohmann::json(*o.budget) : nlohmann::json()},
                       {"exclude_unknown", o.exclude_unknown}};
    manifest.outputs = {fs::path(o.out).filename().string()};
    manifest.finished = std::chrono::system_clock::now();
    manifest.save(o.out + ".manifest.json");
  }
  return kExitOk;
}

int cmd_kappa(const Options& o, std::ostream& out) {
  RunManifest manifest;
  manifest.started = std::chrono::system_clock::now();
  const SamplingModel model = make_model(o.n, o.low, o.high, o.seed);
  if (model.n > kMaxExhaustiveItems) {
    throw UsageError("kappa supports at most " + std::to_string(kMaxExhaustiveItems) + " items");
  }
  const ConstraintPair cp = parse_pair(o.c, o.p);
  std::ostringstream csv;
  write_kappa_csv(csv, {kappa(model, cp, o.trials, o.threads.value_or(default_threads()))});
  emit(o.out, csv.str(), out);

  if (!o.out.empty()) {
    manifest.command = "kappa";
    manifest.seed = o.seed;
    manifest.config = {{"model", to_json(model)},
                       {"c", cp.c().to_string()},
                       {"p", cp.p().to_string()},
                       {"trials", o.trials}};
    manifest.outputs = {fs::path(o.out).filename().string()};
    manifest.finished = std::chrono::system_clock::now();
    manifest.save(o.out + ".manifest.json");
  }
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  RunManifest manifest;
  manifest.started = std::chrono::system_clock::now();
  SweepConfig cfg;
  try {
    cfg = load_sweep_config(o.file);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.grid.threads = o.threads.value_or(default_threads());
  if (!o.out.empty()) cfg.out_dir = o.out;
  if (o.sweep_n) cfg.grid.model.n = *o.sweep_n;
  if (o.sweep_seed) cfg.grid.model.master_seed = *o.sweep_seed;
  if (o.sweep_trials) cfg.grid.trials_per_cell = *o.sweep_trials;
  try {
    if (o.sweep_step) cfg.grid.step = Ratio::parse(*o.sweep_step);
    cfg.grid.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  fs::create_directories(cfg.out_dir);

  const ProbabilityGrid grid = run_grid(cfg.grid);
  const RatioProjection projection = ratio_projection(grid);
  std::vector<Isoquant> isoquants;
  for (const double level : cfg.levels) isoquants.push_back(extract_isoquant(grid, level));

  auto write = [&](const char* name, auto&& writer) {
    std::ofstream file(cfg.out_dir / name);
    if (!file) throw std::runtime_error("cannot write " + (cfg.out_dir / name).string());
    writer(file);
    manifest.outputs.emplace_back(name);
  };
  write("grid.csv", [&](std::ostream& s) { write_grid_csv(s, grid); });
  write("ratio.csv", [&](std::ostream& s) { write_ratio_csv(s, projection); });
  write("isoquants.csv", [&](std::ostream& s) { write_isoquant_csv(s, isoquants); });

  manifest.command = "sweep";
  manifest.seed = cfg.grid.model.master_seed;
  manifest.config = to_json(cfg.grid);
  manifest.config["levels"] = cfg.levels;
  manifest.finished = std::chrono::system_clock::now();
  manifest.save(cfg.out_dir / "manifest.json");

  const HardnessSummary hard = hardness_summary(grid);
  const std::optional<double> crossing = ratio_crossing(projection, 0.5);
  out << "cells:            " << grid.cells().size() << " (" << grid.trials()
      << " trials each)\n"
      << "hardest cell:     c=" << hard.argmax_c.to_decimal(2)
      << " p=" << hard.argmax_p.to_decimal(2)
      << " median nodes=" << format_real(grid.cells()[hard.argmax_cell].nodes_median) << '\n'
      << "transition band:  " << hard.band_cells << " cells, median nodes "
      << format_real(hard.band_nodes_median) << " vs " << format_real(hard.outside_nodes_median)
      << " outside (mean " << format_real(hard.band_nodes_mean) << " vs "
      << format_real(hard.outside_nodes_mean) << ")\n"
      << "0.5 crossing:     log(c/p) = " << (crossing ? format_real(*crossing) : "none") << '\n'
      << "wrote grid.csv ratio.csv isoquants.csv manifest.json to " << cfg.out_dir.string()
      << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random 0-1 knapsack decision instances and their solvability phase transition"};
  app.require_subcommand(1);
  Options o;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of items")->check(CLI::PositiveNumber);
    sub->add_option("--low", o.low, "Smallest weight/value")->capture_default_str();
    sub->add_option("--high", o.high, "Largest weight/value")->capture_default_str();
    sub->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--c", o.c, "Normalized capacity (decimal or fraction)")->required();
    sub->add_option("--p", o.p, "Normalized profit (decimal or fraction)")->required();
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads,
                    std::string("Worker threads (default: $") + kThreadsEnv +
                        " or hardware concurrency)")
        ->check(CLI::PositiveNumber);
  };

  auto* generate = app.add_subcommand("generate", "Write sampled instances to a directory");
  add_model(generate);
  generate->add_option("--count", o.count, "Number of instances")->capture_default_str();
  generate->add_option("--out", o.out, "Output directory")->required();

  auto* solve = app.add_subcommand(
      "solve", "Decide one instance; exit 0 solvable, 1 unsolvable, 2 unknown");
  solve->add_option("instance", o.file, "Instance file")->required()->check(CLI::ExistingFile);
  add_pair(solve);
  solve->add_option("--solver", o.solver, "oracle or bnb")
      ->check(CLI::IsMember({"oracle", "bnb"}))
      ->capture_default_str();
  solve->add_option("--budget", o.budget, "Node budget for bnb")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Run a (c, p) grid experiment from a config file");
  sweep->add_option("config", o.file, "Config file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", o.out, "Output directory (overrides the config)");
  sweep->add_option("--n", o.sweep_n, "Item count (overrides the config)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", o.sweep_seed, "Master seed (overrides the config)");
  sweep->add_option("--trials", o.sweep_trials, "Trials per cell (overrides the config)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--step", o.sweep_step, "Grid step, 1/k (overrides the config)");
  add_threads(sweep);

  auto* bounds = app.add_subcommand("bounds", "Estimate P[E], P[E^l], P[E^L] at one (c, p)");
  add_model(bounds);
  add_pair(bounds);
  bounds->add_option("--trials", o.trials, "Sampled instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bounds->add_option("--budget", o.budget, "Node budget per solve")->check(CLI::PositiveNumber);
  bounds->add_flag("--exclude-unknown", o.exclude_unknown,
                   "Count and skip budget-exhausted trials instead of failing");
  bounds->add_option("--out", o.out, "CSV file (default: stdout)");
  add_threads(bounds);

  auto* kappa_cmd = app.add_subcommand("kappa", "Estimate constrainedness at one (c, p)");
  add_model(kappa_cmd);
  add_pair(kappa_cmd);
  kappa_cmd->add_option("--trials", o.trials, "Sampled instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  kappa_cmd->add_option("--out", o.out, "CSV file (default: stdout)");
  add_threads(kappa_cmd);

  auto* lattice = app.add_subcommand("lattice", "Print n_cap n_profit n_both for one instance");
  lattice->add_option("instance", o.file, "Instance file")->required()->check(CLI::ExistingFile);
  add_pair(lattice);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*kappa_cmd) return cmd_kappa(o, out);
    if (*lattice) return cmd_lattice(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace kpphase::cli
