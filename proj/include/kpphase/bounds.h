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

// Monte-Carlo estimates of the solvability probability P[E(c,p)] and of the
// two prefix lower bounds:
//
//   E^l  some prefix of the items in sampled order is a solution;
//   E^L  some prefix of the items in ascending-weight order is a solution.
//
// With s* the largest prefix within capacity and G(s) the probability that
// the first s values meet the profit target,
//
//   P[E^l] = sum_s f(s) G(s),          f(s) = P[s* = s]
//          = 1 - sum_s F(s-1) g(s),    F(-1) = 0
//
// where F and g are the cumulative of f and the density of G. The
// unshifted form 1 - sum_s F(s) g(s) is also reported; it differs from the
// first two by sum_s f(s) g(s).

#ifndef KPPHASE_BOUNDS_H_
#define KPPHASE_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kpphase/instance.h"
#include "kpphase/sampling.h"
#include "kpphase/solvers.h"

namespace kpphase {

enum class ItemOrder { kSampled, kAscendingWeight };

// Empirical prefix profile for one (c, p). All vectors have n + 1 entries,
// indexed by prefix size s.
struct PrefixProfile {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::vector<double> f;  // P[s* = s]
  std::vector<double> F;  // P[s* <= s]
  std::vector<double> g;  // P[first profit-meeting prefix = s]
  std::vector<double> G;  // P[prefix value at s meets profit]
  // Mass of trials where no prefix meets the profit target; kept out of g.
  double never_profit = 0.0;
};

PrefixProfile estimate_profiles(const SamplingModel& model, const ConstraintPair& cp,
                                std::uint64_t trials, ItemOrder order = ItemOrder::kSampled,
                                unsigned threads = 1);

// sum_s f(s) G(s)
double lower_bound_el(const PrefixProfile& profile);

struct ComplementForms {
  double published = 0.0;  // 1 - sum_s F(s) g(s)
  double shifted = 0.0;    // 1 - sum_s F(s-1) g(s); equals lower_bound_el
};
ComplementForms lower_bound_el_complement(const PrefixProfile& profile);

enum class UnknownPolicy {
  kFail,     // an Unknown verdict aborts the estimate
  kExclude,  // Unknown trials are counted and left out of all three rates
};

struct EventOptions {
  std::optional<std::uint64_t> node_budget;
  UnknownPolicy unknown_policy = UnknownPolicy::kFail;
  unsigned threads = 1;
};

class UnknownVerdictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The three indicators of one sampled instance, plus its effort.
struct EventIndicators {
  bool el = false;
  bool eL = false;
  Verdict e = Verdict::kUnsolvable;
  std::uint64_t nodes = 0;
};

// Indicators for trials 0..trials-1, in trial order.
std::vector<EventIndicators> sample_event_indicators(const SamplingModel& model,
                                                     const ConstraintPair& cp,
                                                     std::uint64_t trials,
                                                     const EventOptions& options = {});

struct EventEstimate {
  double p_E = 0.0;
  double p_El = 0.0;
  double p_EL = 0.0;
  double stderr_E = 0.0;
  double stderr_El = 0.0;
  double stderr_EL = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t unknown_count = 0;
};

// sqrt(p (1 - p) / trials)
double binomial_stderr(double p, std::uint64_t trials);

EventEstimate summarize_events(const std::vector<EventIndicators>& indicators,
                               UnknownPolicy policy = UnknownPolicy::kFail);

// Paired estimate of P[E], P[E^l], P[E^L] over the same sampled instances.
// Throws UnknownVerdictError on a budget-exhausted solve under kFail.
EventEstimate estimate_event_probs(const SamplingModel& model, const ConstraintPair& cp,
                                   std::uint64_t trials, const EventOptions& options = {});

}  // namespace kpphase

#endif  // KPPHASE_BOUNDS_H_
