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

#ifndef KPPHASE_RATIO_H_
#define KPPHASE_RATIO_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kpphase {

// Exact non-negative rational number, always stored in lowest terms.
//
// All comparisons cross-multiply in 128-bit integers, so two Ratios whose
// components fit in 64 bits are ordered without rounding. Arithmetic that
// would leave the 64-bit range throws std::overflow_error instead of
// silently wrapping.
class Ratio {
 public:
  constexpr Ratio() = default;
  // Throws std::domain_error when denominator is zero.
  Ratio(std::uint64_t numerator, std::uint64_t denominator = 1);

  // Parses "3", "0.44", ".5", "11/25". Decimal strings are converted digit by
  // digit ("0.44" -> 11/25), never through a binary float. Throws
  // std::invalid_argument on malformed input.
  static Ratio parse(std::string_view text);

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  // Largest integer <= value / smallest integer >= value.
  std::uint64_t floor() const { return num_ / den_; }
  std::uint64_t ceil() const { return num_ / den_ + (num_ % den_ != 0); }

  double to_double() const;

  // "n/d", or "n" when the denominator is one.
  std::string to_string() const;
  // Fixed-point rendering with round-half-up, e.g. 10/19 -> "0.526316".
  std::string to_decimal(int fractional_digits = 6) const;

  friend bool operator==(const Ratio& a, const Ratio& b) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  // Throws std::domain_error when the result would be negative.
  friend Ratio operator-(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  // Throws std::domain_error on division by zero.
  friend Ratio operator/(const Ratio& a, const Ratio& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

// Exact comparison of a Ratio against the integer fraction a / b (b > 0).
std::strong_ordering compare(const Ratio& r, std::uint64_t a, std::uint64_t b);

}  // namespace kpphase

#endif  // KPPHASE_RATIO_H_
