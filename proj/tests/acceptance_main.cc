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

// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.h"
#include "kpphase/bounds.h"
#include "kpphase/rng.h"
#include "kpphase/sampling.h"
#include "kpphase/solvers.h"
#include "kpphase/sweep.h"

namespace kpphase::acceptance {
namespace {

unsigned Threads() { return std::max(1u, std::thread::hardware_concurrency()); }

template <typename... Args>
void Detail(const char* fmt, Args... args) {
  std::printf("    ");
  std::printf(fmt, args...);
  std::printf("\n");
}

std::string Dec(const Ratio& r) { return r.to_decimal(2); }

const Instance kFigure({2, 5, 8, 4}, {3, 2, 6, 9});

// 1. Four-item lattice example.
bool FigureOne() {
  const auto start = std::chrono::steady_clock::now();
  const ConstraintPair a(Ratio(10, 19), Ratio(3, 4));
  const ConstraintPair b(Ratio(12, 19), Ratio(3, 5));
  const SolveOutcome oa = brute_force_decide(kFigure, a);
  const SolveOutcome ob = brute_force_decide(kFigure, b);
  const Decision ba = branch_and_bound_decide(kFigure, a);
  const Decision bb = branch_and_bound_decide(kFigure, b);
  const LatticeCensus census = lattice_census(kFigure, a);
  const double micros = std::chrono::duration<double, std::micro>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  const bool witness_ok = ob.witness && verify_witness(kFigure, b, *ob.witness) &&
                          is_solvable(bb) &&
                          verify_witness(kFigure, b, *std::get<SolveOutcome>(bb).witness);
  Detail("(10, 15): oracle %s, bnb %s; census n_cap=%llu n_profit=%llu n_both=%llu",
         oa.solvable ? "solvable" : "unsolvable", is_solvable(ba) ? "solvable" : "unsolvable",
         static_cast<unsigned long long>(census.n_cap),
         static_cast<unsigned long long>(census.n_profit),
         static_cast<unsigned long long>(census.n_both));
  Detail("(12, 12): oracle %s witness %s, bnb %s witness %s", ob.solvable ? "solvable" : "unsolvable",
         ob.witness ? format_witness(*ob.witness).c_str() : "-",
         is_solvable(bb) ? "solvable" : "unsolvable",
         is_solvable(bb) ? format_witness(*std::get<SolveOutcome>(bb).witness).c_str() : "-");
  Detail("elapsed %.1f us", micros);
  return !oa.solvable && !is_solvable(ba) && census.n_both == 0 && ob.solvable && witness_ok &&
         micros < 1000.0;
}

// 2. Branch and bound against exhaustive enumeration.
bool OracleEquivalence() {
  const auto start = std::chrono::steady_clock::now();
  const SamplingModel model{12, 1, 10'000'000, 2026};
  std::uint64_t checks = 0, mismatches = 0, solvable = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const Instance inst = sample_instance(model, t);
    const BranchAndBound bnb(inst);
    const SubsetTable table(inst);
    for (std::uint64_t c = 0; c <= 10; ++c) {
      for (std::uint64_t p = 0; p <= 10; ++p) {
        const ConstraintPair cp(Ratio(c, 10), Ratio(p, 10));
        const Thresholds th = effective_thresholds(inst, cp);
        const bool oracle = brute_force_decide(inst, cp).solvable;
        const bool census = lattice_census(table, th).n_both >= 1;
        const Decision d = bnb.decide(th);
        const bool witness_ok =
            !is_solvable(d) || verify_witness(inst, cp, *std::get<SolveOutcome>(d).witness);
        ++checks;
        solvable += oracle;
        mismatches += is_unknown(d) || is_solvable(d) != oracle || census != oracle || !witness_ok;
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Detail("%llu (instance, c, p) checks, %llu solvable, %llu disagreements, %.1f s",
         static_cast<unsigned long long>(checks), static_cast<unsigned long long>(solvable),
         static_cast<unsigned long long>(mismatches), secs);
  return mismatches == 0 && secs < 60.0;
}

// 3. Diagonal cells c = p.
bool Symmetry() {
  const SamplingModel model{50, 1, 10'000'000, 303};
  EventOptions options;
  options.threads = Threads();
  bool ok = true;
  std::vector<std::size_t> identity(50);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  for (const std::uint64_t k : {3, 5, 7}) {
    const ConstraintPair cp(Ratio(k, 10), Ratio(k, 10));
    const EventEstimate e = estimate_event_probs(model, cp, 10'000, options);
    const bool el_ok = std::abs(e.p_El - 0.5) <= 0.02;
    const bool e_ok = e.p_E - 0.5 >= 3 * e.stderr_E;
    std::uint64_t ties = 0;
    for (std::uint64_t t = 0; t < 10'000; ++t) {
      const PrefixResult r = prefix_feasible(sample_instance(model, t), identity, cp);
      ties += r.first_profit_s == r.s_star + 1;
    }
    const double tie = static_cast<double>(ties) / 10'000.0;
    Detail("c=p=%s: P[E^l]=%.4f (se %.4f) %s; P[E]=%.4f (se %.4f) %s", Dec(cp.c()).c_str(), e.p_El,
           e.stderr_El, el_ok ? "within 0.5+/-0.02" : "OUTSIDE 0.5+/-0.02", e.p_E, e.stderr_E,
           e_ok ? "> 0.5 + 3se" : "NOT > 0.5 + 3se");
    Detail("        same-step tie mass %.4f; (1 - tie)/2 = %.4f", tie, (1.0 - tie) / 2.0);
    ok = ok && el_ok && e_ok;
  }
  return ok;
}

// 4. Per-instance implications and capacity-profile dominance.
bool BoundOrdering() {
  const SamplingModel model{20, 1, 10'000'000, 404};
  EventOptions options;
  options.threads = Threads();
  bool ok = true;
  for (const auto& [c, p] : {std::pair{9, 10}, {10, 11}, {10, 10}}) {
    const ConstraintPair cp(Ratio(c, 20), Ratio(p, 20));
    const auto ind = sample_event_indicators(model, cp, 5000, options);
    std::uint64_t el_violations = 0, eL_violations = 0;
    for (const EventIndicators& i : ind) {
      el_violations += i.el && i.e != Verdict::kSolvable;
      eL_violations += i.eL && i.e != Verdict::kSolvable;
    }
    const EventEstimate e = summarize_events(ind);
    const double slack = 2 * std::hypot(e.stderr_El, e.stderr_EL);
    const bool order_ok = e.p_El <= e.p_EL + slack;

    const PrefixProfile sampled = estimate_profiles(model, cp, 5000, ItemOrder::kSampled, Threads());
    const PrefixProfile sorted =
        estimate_profiles(model, cp, 5000, ItemOrder::kAscendingWeight, Threads());
    std::size_t f_violations = 0;
    for (std::size_t s = 0; s <= model.n; ++s) f_violations += sorted.F[s] > sampled.F[s];

    Detail("(%s, %s): E^l=>E violations %llu, E^L=>E violations %llu, F~>F at %zu sizes",
           Dec(cp.c()).c_str(), Dec(cp.p()).c_str(), static_cast<unsigned long long>(el_violations),
           static_cast<unsigned long long>(eL_violations), f_violations);
    Detail("        P[E^l]=%.4f <= P[E^L]=%.4f + %.4f: %s; P[E]=%.4f", e.p_El, e.p_EL, slack,
           order_ok ? "yes" : "NO", e.p_E);
    ok = ok && el_violations == 0 && eL_violations == 0 && order_ok && f_violations == 0;
  }
  return ok;
}

// 5. Product-of-marginals sum against its complement and the paired rate.
bool EstimatorIdentity() {
  const SamplingModel model{30, 1, 10'000'000, 505};
  CounterRng pick(505, 0);
  EventOptions options;
  options.threads = Threads();
  bool ok = true;
  for (int i = 0; i < 5; ++i) {
    // Cells on the 0.04 grid with 0.2 <= c, p <= 0.8.
    const Ratio c(pick.uniform(5, 20), 25);
    const Ratio p(pick.uniform(5, 20), 25);
    const ConstraintPair cp(c, p);
    const PrefixProfile prof = estimate_profiles(model, cp, 5000, ItemOrder::kSampled, Threads());
    const double direct_sum = lower_bound_el(prof);
    const ComplementForms forms = lower_bound_el_complement(prof);
    const EventEstimate paired = estimate_event_probs(model.with_seed(506), cp, 5000, options);
    const double se = std::hypot(binomial_stderr(direct_sum, 5000), paired.stderr_El);
    const bool algebraic = std::abs(direct_sum - forms.shifted) <= 1e-12;
    const bool statistical = std::abs(direct_sum - paired.p_El) <= 4 * se;
    Detail("(%s, %s): sum f*G=%.6f shifted=%.6f (|diff| %.1e) published=%.6f paired=%.6f "
           "(%.1f se)",
           Dec(c).c_str(), Dec(p).c_str(), direct_sum, forms.shifted,
           std::abs(direct_sum - forms.shifted), forms.published, paired.p_El,
           se > 0 ? std::abs(direct_sum - paired.p_El) / se : 0.0);
    ok = ok && algebraic && statistical;
  }
  return ok;
}

GridConfig DefaultGrid() {
  GridConfig config;
  config.model = SamplingModel{50, 1, 10'000'000, 606};
  config.step = Ratio(1, 25);
  config.trials_per_cell = 100;
  config.threads = Threads();
  return config;
}

// 6. Sharpness away from the diagonal.
bool Sharpness(const ProbabilityGrid& grid) {
  std::size_t above = 0, above_bad = 0, below = 0, below_bad = 0;
  double worst_above = 2.0, worst_below = -1.0;
  std::string worst_above_at = "-", worst_below_at = "-";
  const Ratio tenth(1, 10);
  for (const GridCell& cell : grid.cells()) {
    if (cell.c >= cell.p + tenth) {
      ++above;
      if (cell.probability < 0.95) ++above_bad;
      if (cell.probability < worst_above) {
        worst_above = cell.probability;
        worst_above_at = "(" + Dec(cell.c) + ", " + Dec(cell.p) + ")";
      }
    }
    if (cell.c + tenth <= cell.p && cell.p >= Ratio(1, 5) && cell.p <= Ratio(9, 10)) {
      ++below;
      if (cell.probability > 0.05) ++below_bad;
      if (cell.probability > worst_below) {
        worst_below = cell.probability;
        worst_below_at = "(" + Dec(cell.c) + ", " + Dec(cell.p) + ")";
      }
    }
  }
  Detail("c >= p + 0.1: %zu cells, %zu below 0.95, minimum %.3f at %s", above, above_bad,
         worst_above, worst_above_at.c_str());
  Detail("c <= p - 0.1, 0.2 <= p <= 0.9: %zu cells, %zu above 0.05, maximum %.3f at %s", below,
         below_bad, worst_below, worst_below_at.c_str());
  const Isoquant half = extract_isoquant(grid, 0.5);
  std::string line;
  for (const IsoquantPoint& pt : half.points) {
    if (pt.c.denominator() <= 10) {
      char buf[48];
      std::snprintf(buf, sizeof buf, " c=%s:p=%.3f", Dec(pt.c).c_str(), pt.p);
      line += buf;
    }
  }
  Detail("0.5 isoquant:%s", line.c_str());
  return above_bad == 0 && below_bad == 0;
}

// 7. Isoquant above the diagonal and ratio-space crossing.
bool Convexity() {
  GridConfig config;
  config.model = SamplingModel{50, 1, 10'000'000, 707};
  config.step = Ratio(1, 20);
  config.trials_per_cell = 1000;
  config.threads = Threads();
  const ProbabilityGrid grid = run_grid(config);
  const Isoquant half = extract_isoquant(grid, 0.5);
  bool ok = true;
  std::size_t columns = 0;
  for (std::uint64_t k = 6; k <= 14; ++k) {
    const Ratio c(k, 20);
    const auto it = std::find_if(half.points.begin(), half.points.end(),
                                 [&](const IsoquantPoint& pt) { return pt.c == c; });
    const bool present = it != half.points.end();
    const bool above = present && it->p > c.to_double();
    ++columns;
    Detail("c=%s: p_0.5=%s %s", Dec(c).c_str(), present ? std::to_string(it->p).c_str() : "none",
           above ? "> c" : "NOT > c");
    ok = ok && above;
  }
  const std::optional<double> crossing = ratio_crossing(ratio_projection(grid), 0.5);
  Detail("ratio-space 0.5 crossing at log(c/p) = %s",
         crossing ? std::to_string(*crossing).c_str() : "none");
  return ok && columns == 9 && crossing && *crossing <= 0.0;
}

// 8. Effort concentrates in the transition band.
bool Hardness(const ProbabilityGrid& grid) {
  const HardnessSummary s = hardness_summary(grid);
  const GridCell& peak = grid.cells()[s.argmax_cell];
  const bool peak_in_band = peak.probability > kBandLow && peak.probability < kBandHigh;
  const bool band_harder = s.band_nodes_median > s.outside_nodes_median;
  Detail("argmax median nodes at (%s, %s): median %.1f, mean %.2f, probability %.3f %s",
         Dec(s.argmax_c).c_str(), Dec(s.argmax_p).c_str(), peak.nodes_median, peak.nodes_mean,
         peak.probability, peak_in_band ? "(in band)" : "(outside band)");
  Detail("band: %zu cells, median of cell medians %.2f vs %.2f outside %s", s.band_cells,
         s.band_nodes_median, s.outside_nodes_median, band_harder ? "" : "(not greater)");
  Detail("diagnostic only: mean of cell means %.3f in band vs %.3f outside", s.band_nodes_mean,
         s.outside_nodes_mean);
  double ref_max = 0.0;
  std::string ref_at = "-";
  for (const GridCell& cell : grid.cells()) {
    if (cell.c >= Ratio(2, 5) && cell.c <= Ratio(13, 25) && cell.p >= Ratio(13, 25) &&
        cell.p <= Ratio(17, 25) && cell.nodes_mean > ref_max) {
      ref_max = cell.nodes_mean;
      ref_at = "(" + Dec(cell.c) + ", " + Dec(cell.p) + ")";
    }
  }
  Detail("reference hard region c in [0.40, 0.52], p in [0.52, 0.68]: largest mean %.3f at %s",
         ref_max, ref_at.c_str());
  return peak_in_band && band_harder;
}

// 9. Constrainedness.
bool Kappa() {
  const KappaSampler sampler(SamplingModel{15, 1, 10'000'000, 909}, 2000, Threads());
  std::size_t increases = 0, comparisons = 0;
  for (std::uint64_t p = 1; p <= 9; ++p) {
    double previous = std::numeric_limits<double>::infinity();
    for (std::uint64_t c = 0; c <= 10; ++c) {
      const double k = sampler.estimate(ConstraintPair(Ratio(c, 10), Ratio(p, 10))).kappa;
      if (c > 0) {
        ++comparisons;
        increases += k > previous;
      }
      previous = k;
    }
  }
  Detail("kappa along increasing c: %zu increases in %zu steps", increases, comparisons);
  bool ok = increases == 0;
  for (const std::uint64_t c : {3, 4, 5, 6, 7}) {
    const KappaContour contour = kappa_contour(sampler, Ratio(c, 10));
    const double solvable = contour.at_low.solvable_fraction;
    const bool inside = solvable > 0.01 && solvable < 0.99;
    Detail("c=%s: kappa=1 at p in [%.4f, %.4f], delta=%+.4f, E[Sol]=%.3f, P[solvable]=%.3f",
           Dec(Ratio(c, 10)).c_str(), contour.p_low.to_double(), contour.p_high.to_double(),
           contour.delta, contour.at_low.expected_solutions, solvable);
    ok = ok && contour.delta >= 0.0 && inside;
  }
  return ok;
}

// 10. Thread count never changes seeded output.
bool Determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "kpphase_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto run = [](std::vector<std::string> args) {
    args.insert(args.begin(), "kpphase");
    std::ostringstream out, err;
    return cli::run(args, out, err);
  };
  {
    std::ofstream cfg(root / "sweep.ini");
    cfg << "[model]\nn = 30\nseed = 10\n\n[grid]\nstep = 0.05\ntrials = 40\ninclude_bounds = true\n";
  }
  bool ok = true;
  std::size_t compared = 0;
  for (const char* threads : {"1", "8"}) {
    const fs::path dir = root / threads;
    ok &= run({"sweep", (root / "sweep.ini").string(), "--threads", threads, "--out", dir.string()}) == 0;
    ok &= run({"bounds", "--n", "50", "--c", "0.44", "--p", "0.6", "--trials", "2000", "--seed",
               "10", "--threads", threads, "--out", (dir / "bounds.csv").string()}) == 0;
    ok &= run({"kappa", "--n", "14", "--c", "0.4", "--p", "0.6", "--trials", "300", "--seed", "10",
               "--threads", threads, "--out", (dir / "kappa.csv").string()}) == 0;
    ok &= run({"generate", "--n", "50", "--seed", "10", "--count", "5", "--out",
               (dir / "instances").string()}) == 0;
  }
  for (const char* name : {"grid.csv", "ratio.csv", "isoquants.csv", "bounds.csv", "kappa.csv",
                           "instances/instance_000004.txt"}) {
    const std::string a = slurp(root / "1" / name);
    const std::string b = slurp(root / "8" / name);
    const bool same = !a.empty() && a == b;
    ++compared;
    if (!same) Detail("%s differs between 1 and 8 threads", name);
    ok = ok && same;
  }
  Detail("%zu artifacts compared byte for byte (sweep, bounds, kappa, generate)", compared);
  fs::remove_all(root);
  return ok;
}

}  // namespace
}  // namespace kpphase::acceptance

int main() {
  using namespace kpphase::acceptance;
  std::printf("acceptance suite (%u worker threads)\n", Threads());
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<bool()>& check) {
    const auto start = std::chrono::steady_clock::now();
    std::printf("criterion %d: %s\n", id, name);
    std::fflush(stdout);
    const bool pass = check();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", id, name, secs);
    std::fflush(stdout);
    failed += !pass;
  };

  report(1, "four-item lattice ground truth", FigureOne);
  report(2, "branch and bound agrees with the exhaustive oracle", OracleEquivalence);
  report(3, "diagonal symmetry of the prefix event", Symmetry);
  report(4, "bound ordering on paired samples", BoundOrdering);
  report(5, "estimator identity", EstimatorIdentity);

  std::optional<kpphase::ProbabilityGrid> grid;
  report(6, "phase-transition sharpness", [&] {
    grid = kpphase::run_grid(DefaultGrid());
    return Sharpness(*grid);
  });
  report(7, "isoquant convexity", Convexity);
  report(8, "hardness localization", [&] { return Hardness(*grid); });
  report(9, "constrainedness kappa", Kappa);
  report(10, "thread-count determinism", Determinism);

  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
