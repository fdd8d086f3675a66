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

#include "kpphase/instance.h"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kpphase {

namespace {

std::int64_t checked_sum(std::span<const std::int64_t> xs, const char* what) {
  std::int64_t total = 0;
  for (const std::int64_t x : xs) {
    if (x < 1) {
      throw std::invalid_argument(std::string("Instance: ") + what + " must be positive integers");
    }
    if (__builtin_add_overflow(total, x, &total)) {
      throw std::overflow_error(std::string("Instance: ") + what + " sum overflows");
    }
  }
  return total;
}

std::vector<std::int64_t> read_line_of(std::istream& in, std::size_t n, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(std::string("Instance: missing ") + what + " line");
  }
  std::istringstream ls(line);
  std::vector<std::int64_t> out;
  std::int64_t x = 0;
  while (ls >> x) out.push_back(x);
  if (!ls.eof()) {
    throw std::invalid_argument(std::string("Instance: non-integer token in ") + what + " line");
  }
  if (out.size() != n) {
    throw std::invalid_argument(std::string("Instance: expected ") + std::to_string(n) + " " +
                                what + ", got " + std::to_string(out.size()));
  }
  return out;
}

}  // namespace

Instance::Instance(std::vector<std::int64_t> weights, std::vector<std::int64_t> values)
    : weights_(std::move(weights)), values_(std::move(values)) {
  if (weights_.empty()) throw std::invalid_argument("Instance: needs at least one item");
  if (weights_.size() != values_.size()) {
    throw std::invalid_argument("Instance: weights and values differ in length");
  }
  total_weight_ = checked_sum(weights_, "weights");
  total_value_ = checked_sum(values_, "values");
}

Instance Instance::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("Instance: empty input");
  std::istringstream ls(line);
  long long n = 0;
  if (!(ls >> n) || n < 1) throw std::invalid_argument("Instance: bad item count line");
  auto weights = read_line_of(in, static_cast<std::size_t>(n), "weights");
  auto values = read_line_of(in, static_cast<std::size_t>(n), "values");
  return Instance(std::move(weights), std::move(values));
}

Instance Instance::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  return read(in);
}

void Instance::write(std::ostream& out) const {
  out << size() << '\n';
  for (std::size_t i = 0; i < size(); ++i) out << (i ? " " : "") << weights_[i];
  out << '\n';
  for (std::size_t i = 0; i < size(); ++i) out << (i ? " " : "") << values_[i];
  out << '\n';
}

void Instance::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file " + path.string());
  write(out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

ConstraintPair::ConstraintPair(Ratio c, Ratio p) : c_(c), p_(p) {
  if (c_ > Ratio(1) || p_ > Ratio(1)) {
    throw std::domain_error("ConstraintPair: c and p must lie in [0, 1], got c=" +
                            c_.to_string() + " p=" + p_.to_string());
  }
}

std::optional<Ratio> ConstraintPair::ratio() const {
  if (p_.is_zero()) return std::nullopt;
  return c_ / p_;
}

Ratio min_profit(std::size_t n) {
  if (n == 0) throw std::domain_error("min_profit: n must be positive");
  return Ratio(1, n);
}

Ratio normalize(std::uint64_t y, std::span<const std::int64_t> parts) {
  if (parts.empty()) throw std::domain_error("normalize: empty parts");
  std::uint64_t total = 0;
  for (const std::int64_t x : parts) {
    if (x < 1) throw std::domain_error("normalize: parts must be positive");
    total += static_cast<std::uint64_t>(x);
  }
  if (y > total) {
    throw std::domain_error("normalize: value " + std::to_string(y) + " exceeds sum " +
                            std::to_string(total));
  }
  return Ratio(y, total);
}

Thresholds effective_thresholds(const Instance& inst, const ConstraintPair& cp) {
  return Thresholds{
      cp.c() * Ratio(static_cast<std::uint64_t>(inst.total_weight())),
      cp.p() * Ratio(static_cast<std::uint64_t>(inst.total_value())),
  };
}

SubsetTotals subset_totals(const Instance& inst, std::span<const std::size_t> items) {
  SubsetTotals t;
  for (const std::size_t i : items) {
    if (i >= inst.size()) throw std::out_of_range("subset_totals: item index out of range");
    t.weight += inst.weights()[i];
    t.value += inst.values()[i];
  }
  return t;
}

}  // namespace kpphase
