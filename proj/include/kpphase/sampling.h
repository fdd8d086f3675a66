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

#ifndef KPPHASE_SAMPLING_H_
#define KPPHASE_SAMPLING_H_

#include <cstdint>

#include "kpphase/instance.h"

namespace kpphase {

// Random instances with n items whose weights and values are drawn
// independently from the discrete uniform distribution on [low, high].
struct SamplingModel {
  std::size_t n = 50;
  std::int64_t low = 1;
  std::int64_t high = 10'000'000;
  std::uint64_t master_seed = 0;

  // Throws std::invalid_argument unless n >= 1 and 1 <= low <= high.
  void validate() const;

  // Same distribution, different seed; used where two estimates must come
  // from independent samples.
  SamplingModel with_seed(std::uint64_t seed) const {
    SamplingModel m = *this;
    m.master_seed = seed;
    return m;
  }
};

// Instance number `index` of the model. Weights come from lane 0 and values
// from lane 1 of stream `index`, so the result depends only on
// (master_seed, index).
Instance sample_instance(const SamplingModel& model, std::uint64_t index);

// Expectation-level cardinality window for solutions: a solution of size k
// is expected when p*n <= k <= c*n.
struct MarkovWindow {
  double k_low = 0.0;
  double k_high = 0.0;
  bool expected_solvable = false;
  // Whether an integer k fits in [k_low, k_high]. Reported only; it does not
  // override expected_solvable.
  bool has_integer_size = false;
};

MarkovWindow markov_window(std::size_t n, const ConstraintPair& cp);

}  // namespace kpphase

#endif  // KPPHASE_SAMPLING_H_
