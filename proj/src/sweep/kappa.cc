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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kpphase/parallel.h"
#include "kpphase/sweep.h"

namespace kpphase {

double search_space_bits(std::size_t n) {
  return std::log2(std::ldexp(1.0, static_cast<int>(n)));
}

KappaSampler::KappaSampler(const SamplingModel& model, std::uint64_t trials, unsigned threads)
    : model_(model), threads_(threads) {
  model.validate();
  if (model.n > kMaxExhaustiveItems) {
    throw std::length_error("kappa needs exhaustive census; n must be <= " +
                            std::to_string(kMaxExhaustiveItems));
  }
  if (trials < 1) throw std::invalid_argument("kappa: trials must be >= 1");
  instances_.reserve(trials);
  tables_.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    instances_.push_back(sample_instance(model, t));
    tables_.emplace_back(instances_.back());
  }
}

KappaEstimate KappaSampler::estimate(const ConstraintPair& cp) const {
  const std::size_t trials = instances_.size();
  std::vector<std::uint64_t> solutions(trials);
  parallel_for(trials, threads_, [&](std::size_t t) {
    solutions[t] = lattice_census(tables_[t], effective_thresholds(instances_[t], cp)).n_both;
  });

  KappaEstimate est;
  est.n = model_.n;
  est.cp = cp;
  est.trials = trials;
  std::uint64_t total = 0, solvable = 0;
  for (const std::uint64_t s : solutions) {
    total += s;
    solvable += s > 0;
  }
  est.expected_solutions = static_cast<double>(total) / static_cast<double>(trials);
  est.solvable_fraction = static_cast<double>(solvable) / static_cast<double>(trials);
  est.kappa = total == 0 ? std::numeric_limits<double>::infinity()
                         : 1.0 - std::log2(est.expected_solutions) / search_space_bits(model_.n);
  return est;
}

KappaEstimate kappa(const SamplingModel& model, const ConstraintPair& cp, std::uint64_t trials,
                    unsigned threads) {
  return KappaSampler(model, trials, threads).estimate(cp);
}

KappaContour kappa_contour(const KappaSampler& sampler, const Ratio& c, int iterations) {
  if (iterations < 1 || iterations > 40) {
    throw std::invalid_argument("kappa_contour: iterations must be in [1, 40]");
  }
  // p = 0 always admits the empty set, so kappa <= 1 there.
  KappaContour out;
  out.c = c;
  out.p_low = Ratio(0);
  out.at_low = sampler.estimate(ConstraintPair(c, out.p_low));
  out.p_high = Ratio(1);
  out.at_high = sampler.estimate(ConstraintPair(c, out.p_high));
  if (out.at_high.kappa <= 1.0) {
    out.p_low = out.p_high;
    out.at_low = out.at_high;
  } else {
    for (int i = 0; i < iterations; ++i) {
      const Ratio mid = (out.p_low + out.p_high) * Ratio(1, 2);
      const KappaEstimate est = sampler.estimate(ConstraintPair(c, mid));
      if (est.kappa <= 1.0) {
        out.p_low = mid;
        out.at_low = est;
      } else {
        out.p_high = mid;
        out.at_high = est;
      }
    }
  }
  out.delta = (out.p_low.to_double() + out.p_high.to_double()) / 2.0 - c.to_double();
  return out;
}

}  // namespace kpphase
