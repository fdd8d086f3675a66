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

#include "kpphase/sampling.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "kpphase/rng.h"

namespace kpphase {

std::uint64_t CounterRng::uniform(std::uint64_t low, std::uint64_t high) {
  if (low > high) throw std::invalid_argument("CounterRng::uniform: low > high");
  const std::uint64_t range = high - low + 1;
  if (range == 0) return (*this)();  // full 64-bit range
  using u128 = unsigned __int128;
  u128 m = static_cast<u128>((*this)()) * range;
  auto l = static_cast<std::uint64_t>(m);
  if (l < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (l < threshold) {
      m = static_cast<u128>((*this)()) * range;
      l = static_cast<std::uint64_t>(m);
    }
  }
  return low + static_cast<std::uint64_t>(m >> 64);
}

void SamplingModel::validate() const {
  if (n < 1) throw std::invalid_argument("SamplingModel: n must be >= 1");
  if (low < 1) throw std::invalid_argument("SamplingModel: low must be >= 1");
  if (low > high) {
    throw std::invalid_argument("SamplingModel: low (" + std::to_string(low) +
                                ") exceeds high (" + std::to_string(high) + ")");
  }
}

Instance sample_instance(const SamplingModel& model, std::uint64_t index) {
  model.validate();
  CounterRng weight_rng(model.master_seed, index, 0);
  CounterRng value_rng(model.master_seed, index, 1);
  const auto low = static_cast<std::uint64_t>(model.low);
  const auto high = static_cast<std::uint64_t>(model.high);
  std::vector<std::int64_t> weights(model.n);
  std::vector<std::int64_t> values(model.n);
  for (auto& w : weights) w = static_cast<std::int64_t>(weight_rng.uniform(low, high));
  for (auto& v : values) v = static_cast<std::int64_t>(value_rng.uniform(low, high));
  return Instance(std::move(weights), std::move(values));
}

MarkovWindow markov_window(std::size_t n, const ConstraintPair& cp) {
  if (n < 1) throw std::domain_error("markov_window: n must be >= 1");
  const Ratio items(n);
  const Ratio low = cp.p() * items;
  const Ratio high = cp.c() * items;
  MarkovWindow w;
  w.k_low = low.to_double();
  w.k_high = high.to_double();
  w.expected_solvable = cp.c() >= cp.p();
  w.has_integer_size = low.ceil() <= high.floor();
  return w;
}

}  // namespace kpphase
