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

#include "kpphase/ratio.h"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace kpphase {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMax64 = std::numeric_limits<std::uint64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces a wide fraction and narrows it back to 64 bits.
Ratio narrow(u128 num, u128 den) {
  if (den == 0) throw std::domain_error("Ratio: zero denominator");
  const u128 g = num == 0 ? den : gcd128(num, den);
  num /= g;
  den /= g;
  if (num > kMax64 || den > kMax64) {
    throw std::overflow_error("Ratio: result exceeds 64-bit components");
  }
  return Ratio(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

std::uint64_t parse_digits(std::string_view digits, std::string_view text) {
  if (digits.empty()) {
    throw std::invalid_argument("Ratio: malformed number '" + std::string(text) + "'");
  }
  u128 value = 0;
  for (const char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("Ratio: malformed number '" + std::string(text) + "'");
    }
    value = value * 10 + static_cast<unsigned>(ch - '0');
    if (value > kMax64) {
      throw std::overflow_error("Ratio: number too large '" + std::string(text) + "'");
    }
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw std::domain_error("Ratio: zero denominator");
  const std::uint64_t g =
      numerator == 0 ? denominator : std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Ratio Ratio::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::uint64_t num = parse_digits(s.substr(0, slash), text);
    const std::uint64_t den = parse_digits(s.substr(slash + 1), text);
    return Ratio(num, den);
  }

  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return Ratio(parse_digits(s, text));

  const std::string_view whole = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    throw std::invalid_argument("Ratio: malformed number '" + std::string(text) + "'");
  }
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
  if (frac.size() > 19) {
    throw std::overflow_error("Ratio: too many fractional digits '" + std::string(text) + "'");
  }
  const std::uint64_t whole_value = whole.empty() ? 0 : parse_digits(whole, text);
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const std::uint64_t frac_value = frac.empty() ? 0 : parse_digits(frac, text);
  return narrow(static_cast<u128>(whole_value) * scale + frac_value, scale);
}

double Ratio::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Ratio::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Ratio::to_decimal(int fractional_digits) const {
  if (fractional_digits < 0 || fractional_digits > 18) {
    throw std::invalid_argument("Ratio::to_decimal: digits must be in [0, 18]");
  }
  u128 scale = 1;
  for (int i = 0; i < fractional_digits; ++i) scale *= 10;
  // round(num * scale / den), half away from zero.
  const u128 scaled = (static_cast<u128>(num_) * scale * 2 + den_) / (static_cast<u128>(den_) * 2);
  const u128 whole = scaled / scale;
  u128 frac = scaled % scale;

  auto to_str = [](u128 v) {
    if (v == 0) return std::string("0");
    std::string out;
    while (v != 0) {
      out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return out;
  };
  std::string out = to_str(whole);
  if (fractional_digits == 0) return out;
  std::string digits(static_cast<std::size_t>(fractional_digits), '0');
  for (int i = fractional_digits - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
    frac /= 10;
  }
  return out + "." + digits;
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  const u128 lhs = static_cast<u128>(a.num_) * b.den_;
  const u128 rhs = static_cast<u128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::strong_ordering compare(const Ratio& r, std::uint64_t a, std::uint64_t b) {
  if (b == 0) throw std::domain_error("compare: zero denominator");
  const u128 lhs = static_cast<u128>(r.numerator()) * b;
  const u128 rhs = static_cast<u128>(a) * r.denominator();
  return lhs <=> rhs;
}

Ratio operator+(const Ratio& a, const Ratio& b) {
  const u128 num = static_cast<u128>(a.num_) * b.den_ + static_cast<u128>(b.num_) * a.den_;
  return narrow(num, static_cast<u128>(a.den_) * b.den_);
}

Ratio operator-(const Ratio& a, const Ratio& b) {
  const u128 lhs = static_cast<u128>(a.num_) * b.den_;
  const u128 rhs = static_cast<u128>(b.num_) * a.den_;
  if (lhs < rhs) throw std::domain_error("Ratio: negative difference");
  return narrow(lhs - rhs, static_cast<u128>(a.den_) * b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  return narrow(static_cast<u128>(a.num_) * b.num_, static_cast<u128>(a.den_) * b.den_);
}

Ratio operator/(const Ratio& a, const Ratio& b) {
  if (b.num_ == 0) throw std::domain_error("Ratio: division by zero");
  return narrow(static_cast<u128>(a.num_) * b.den_, static_cast<u128>(a.den_) * b.num_);
}

}  // namespace kpphase
