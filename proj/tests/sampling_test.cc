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

#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "kpphase/parallel.h"
#include "kpphase/rng.h"

namespace kpphase {
namespace {

TEST(CounterRngTest, RandomAccessMatchesSequentialDraws) {
  CounterRng rng(42, 7, 1);
  const CounterRng probe(42, 7, 1);
  for (std::uint64_t k = 0; k < 100; ++k) EXPECT_EQ(rng(), probe.at(k));
  EXPECT_EQ(rng.counter(), 100u);
}

TEST(CounterRngTest, StreamsAndLanesDiffer) {
  const CounterRng a(1, 0, 0);
  const CounterRng b(1, 0, 1);
  const CounterRng c(1, 1, 0);
  const CounterRng d(2, 0, 0);
  std::set<std::uint64_t> first = {a.at(0), b.at(0), c.at(0), d.at(0)};
  EXPECT_EQ(first.size(), 4u);
}

TEST(CounterRngTest, UniformStaysInRangeAndCoversIt) {
  CounterRng rng(3, 4);
  std::vector<int> hits(6, 0);
  for (int i = 0; i < 6000; ++i) {
    const std::uint64_t x = rng.uniform(5, 10);
    ASSERT_GE(x, 5u);
    ASSERT_LE(x, 10u);
    ++hits[x - 5];
  }
  for (const int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(rng.uniform(9, 9), 9u);
  EXPECT_THROW(rng.uniform(2, 1), std::invalid_argument);
}

TEST(SamplingTest, ModelValidation) {
  EXPECT_THROW((SamplingModel{0, 1, 10, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((SamplingModel{5, 0, 10, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((SamplingModel{5, 11, 10, 0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((SamplingModel{5, 10, 10, 0}.validate()));
}

TEST(SamplingTest, DeterministicPerIndex) {
  const SamplingModel model{20, 1, 1000, 99};
  EXPECT_EQ(sample_instance(model, 5), sample_instance(model, 5));
  EXPECT_NE(sample_instance(model, 0), sample_instance(model, 1));
  EXPECT_NE(sample_instance(model, 0), sample_instance(model.with_seed(100), 0));
}

TEST(SamplingTest, DefaultParametersInRange) {
  const SamplingModel model;  // n = 50 on [1, 10^7]
  for (std::uint64_t t = 0; t < 200; ++t) {
    const Instance inst = sample_instance(model, t);
    ASSERT_EQ(inst.size(), 50u);
    for (std::size_t i = 0; i < inst.size(); ++i) {
      ASSERT_GE(inst.weights()[i], 1);
      ASSERT_LE(inst.weights()[i], 10'000'000);
      ASSERT_GE(inst.values()[i], 1);
      ASSERT_LE(inst.values()[i], 10'000'000);
    }
  }
}

TEST(SamplingTest, IndependentOfThreadPlacement) {
  const SamplingModel model{30, 1, 10'000'000, 5};
  std::vector<Instance> serial;
  for (std::uint64_t t = 0; t < 64; ++t) serial.push_back(sample_instance(model, t));
  std::vector<std::optional<Instance>> threaded(64);
  parallel_for(64, 4, [&](std::size_t t) { threaded[t] = sample_instance(model, t); });
  for (std::size_t t = 0; t < 64; ++t) EXPECT_EQ(*threaded[t], serial[t]);
}

TEST(SamplingTest, MomentsLookUniform) {
  const SamplingModel model{50, 1, 100, 17};
  double sum = 0.0;
  std::size_t count = 0;
  for (std::uint64_t t = 0; t < 400; ++t) {
    const Instance inst = sample_instance(model, t);
    for (std::size_t i = 0; i < inst.size(); ++i) {
      sum += static_cast<double>(inst.weights()[i] + inst.values()[i]);
      count += 2;
    }
  }
  // Mean 50.5, sd 28.9, 40000 draws: stderr ~0.15.
  EXPECT_NEAR(sum / static_cast<double>(count), 50.5, 0.6);
}

TEST(MarkovWindowTest, Examples) {
  const MarkovWindow a = markov_window(4, ConstraintPair(Ratio(12, 19), Ratio(3, 5)));
  EXPECT_DOUBLE_EQ(a.k_low, 2.4);
  EXPECT_NEAR(a.k_high, 48.0 / 19.0, 1e-12);
  EXPECT_TRUE(a.expected_solvable);
  EXPECT_FALSE(a.has_integer_size);

  const MarkovWindow b = markov_window(10, ConstraintPair(Ratio(1, 2), Ratio(1, 2)));
  EXPECT_DOUBLE_EQ(b.k_low, 5.0);
  EXPECT_DOUBLE_EQ(b.k_high, 5.0);
  EXPECT_TRUE(b.expected_solvable);
  EXPECT_TRUE(b.has_integer_size);

  EXPECT_FALSE(markov_window(10, ConstraintPair(Ratio(2, 5), Ratio(3, 5))).expected_solvable);
}

TEST(MarkovWindowTest, FlagIsMonotone) {
  for (std::uint64_t c = 0; c <= 10; ++c) {
    for (std::uint64_t p = 0; p <= 10; ++p) {
      const bool here = markov_window(7, ConstraintPair(Ratio(c, 10), Ratio(p, 10))).expected_solvable;
      EXPECT_EQ(here, c >= p);
      if (here && c < 10) {
        EXPECT_TRUE(markov_window(7, ConstraintPair(Ratio(c + 1, 10), Ratio(p, 10))).expected_solvable);
      }
      if (here && p > 0) {
        EXPECT_TRUE(markov_window(7, ConstraintPair(Ratio(c, 10), Ratio(p - 1, 10))).expected_solvable);
      }
      EXPECT_EQ(markov_window(7, ConstraintPair(Ratio(c, 10), Ratio(p, 10))).k_low <=
                    markov_window(7, ConstraintPair(Ratio(c, 10), Ratio(p, 10))).k_high,
                here);
    }
  }
}

}  // namespace
}  // namespace kpphase
