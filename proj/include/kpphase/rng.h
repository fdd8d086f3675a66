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

#ifndef KPPHASE_RNG_H_
#define KPPHASE_RNG_H_

#include <cstdint>
#include <limits>

namespace kpphase {

// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator. Draw number k of stream (seed, stream, lane) is
//
//   key   = mix64(mix64(seed) ^ mix64(stream * 2 + lane + golden))
//   draw  = mix64(key + (k + 1) * golden)
//
// with golden = 0x9e3779b97f4a7c15, i.e. SplitMix64 started at `key`. Any draw
// can be computed without touching the others, so results do not depend on
// how streams are assigned to threads. The construction is frozen: golden
// CSV files depend on it.
class CounterRng {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t lane = 0)
      : key_(stream_key(seed, stream, lane)) {}

  static constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream,
                                            std::uint64_t lane) {
    return mix64(mix64(seed) ^ mix64(stream * 2 + lane + kGolden));
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  // Pure access to draw k.
  constexpr std::uint64_t at(std::uint64_t k) const { return mix64(key_ + (k + 1) * kGolden); }

  constexpr result_type operator()() { return at(counter_++); }

  // Uniform integer on [low, high] by Lemire's multiply-and-reject; consumes
  // one draw except on (rare) rejection.
  std::uint64_t uniform(std::uint64_t low, std::uint64_t high);

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace kpphase

#endif  // KPPHASE_RNG_H_
