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

#include "kpphase/bounds.h"

#include <cmath>
#include <numeric>
#include <string>

#include "kpphase/parallel.h"

namespace kpphase {

namespace {

void check_trials(std::uint64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
}

std::vector<std::size_t> sampled_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

}  // namespace

PrefixProfile estimate_profiles(const SamplingModel& model, const ConstraintPair& cp,
                                std::uint64_t trials, ItemOrder order, unsigned threads) {
  model.validate();
  check_trials(trials);
  const std::size_t n = model.n;
  constexpr std::size_t kNever = static_cast<std::size_t>(-1);

  std::vector<std::size_t> s_star(trials);
  std::vector<std::size_t> first_profit(trials);
  const std::vector<std::size_t> identity = sampled_order(n);
  parallel_for(trials, threads, [&](std::size_t t) {
    const Instance inst = sample_instance(model, t);
    const std::vector<std::size_t> perm =
        order == ItemOrder::kSampled ? identity : weight_greedy_order(inst);
    const PrefixResult r = PrefixScanner(inst, perm).scan(effective_thresholds(inst, cp));
    s_star[t] = r.s_star;
    first_profit[t] = r.first_profit_s.value_or(kNever);
  });

  std::vector<std::uint64_t> f_count(n + 1, 0), g_count(n + 1, 0);
  std::uint64_t never = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++f_count[s_star[t]];
    if (first_profit[t] == kNever) {
      ++never;
    } else {
      ++g_count[first_profit[t]];
    }
  }

  PrefixProfile p;
  p.n = n;
  p.trials = trials;
  p.f.resize(n + 1);
  p.F.resize(n + 1);
  p.g.resize(n + 1);
  p.G.resize(n + 1);
  const auto total = static_cast<double>(trials);
  std::uint64_t f_cum = 0, g_cum = 0;
  for (std::size_t s = 0; s <= n; ++s) {
    f_cum += f_count[s];
    g_cum += g_count[s];
    p.f[s] = static_cast<double>(f_count[s]) / total;
    p.g[s] = static_cast<double>(g_count[s]) / total;
    p.F[s] = static_cast<double>(f_cum) / total;
    p.G[s] = static_cast<double>(g_cum) / total;
  }
  p.never_profit = static_cast<double>(never) / total;
  return p;
}

double lower_bound_el(const PrefixProfile& profile) {
  double sum = 0.0;
  for (std::size_t s = 0; s < profile.f.size(); ++s) sum += profile.f[s] * profile.G[s];
  return sum;
}

ComplementForms lower_bound_el_complement(const PrefixProfile& profile) {
  double published = 0.0;
  double shifted = 0.0;
  for (std::size_t s = 0; s < profile.g.size(); ++s) {
    published += profile.F[s] * profile.g[s];
    if (s > 0) shifted += profile.F[s - 1] * profile.g[s];
  }
  return ComplementForms{1.0 - published, 1.0 - shifted};
}

std::vector<EventIndicators> sample_event_indicators(const SamplingModel& model,
                                                     const ConstraintPair& cp,
                                                     std::uint64_t trials,
                                                     const EventOptions& options) {
  model.validate();
  check_trials(trials);
  const std::vector<std::size_t> identity = sampled_order(model.n);
  std::vector<EventIndicators> out(trials);
  parallel_for(trials, options.threads, [&](std::size_t t) {
    const Instance inst = sample_instance(model, t);
    const Thresholds th = effective_thresholds(inst, cp);
    EventIndicators& ind = out[t];
    ind.el = PrefixScanner(inst, identity).scan(th).profit_met;
    ind.eL = PrefixScanner(inst, weight_greedy_order(inst)).scan(th).profit_met;
    const Decision d = BranchAndBound(inst).decide(th, options.node_budget);
    ind.e = verdict(d);
    ind.nodes = nodes_explored(d);
  });
  return out;
}

double binomial_stderr(double p, std::uint64_t trials) {
  if (trials == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

EventEstimate summarize_events(const std::vector<EventIndicators>& indicators,
                               UnknownPolicy policy) {
  EventEstimate est;
  est.trials = indicators.size();
  std::uint64_t e = 0, el = 0, eL = 0;
  for (std::size_t t = 0; t < indicators.size(); ++t) {
    const EventIndicators& ind = indicators[t];
    if (ind.e == Verdict::kUnknown) {
      if (policy == UnknownPolicy::kFail) {
        throw UnknownVerdictError("node budget exhausted on trial " + std::to_string(t));
      }
      ++est.unknown_count;
      continue;
    }
    e += ind.e == Verdict::kSolvable;
    el += ind.el;
    eL += ind.eL;
  }
  const std::uint64_t decided = est.trials - est.unknown_count;
  if (decided == 0) {
    est.p_E = est.p_El = est.p_EL = std::nan("");
    return est;
  }
  const auto m = static_cast<double>(decided);
  est.p_E = static_cast<double>(e) / m;
  est.p_El = static_cast<double>(el) / m;
  est.p_EL = static_cast<double>(eL) / m;
  est.stderr_E = binomial_stderr(est.p_E, decided);
  est.stderr_El = binomial_stderr(est.p_El, decided);
  est.stderr_EL = binomial_stderr(est.p_EL, decided);
  return est;
}

EventEstimate estimate_event_probs(const SamplingModel& model, const ConstraintPair& cp,
                                   std::uint64_t trials, const EventOptions& options) {
  return summarize_events(sample_event_indicators(model, cp, trials, options),
                          options.unknown_policy);
}

}  // namespace kpphase
