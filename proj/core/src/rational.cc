// Copyright 2026 The NMP Authors.
//
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

#include "nmp/rational.h"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "nmp/error.h"

namespace nmp {
namespace {

using i128 = __int128;

i128 Gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational Make(i128 num, i128 den) {
  Require(den != 0, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = Gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr i128 kMax = std::numeric_limits<int64_t>::max();
  Require(num <= kMax && num >= -kMax && den <= kMax,
          "rational arithmetic overflow");
  return Rational(static_cast<int64_t>(num), static_cast<int64_t>(den));
}

i128 Mul(i128 a, i128 b) {
  i128 out;
  Require(!__builtin_mul_overflow(a, b, &out), "rational arithmetic overflow");
  return out;
}

[[noreturn]] void BadNumber(std::string_view text) {
  Fail(ErrorCode::kFormat, "cannot parse number '" + std::string(text) + "'");
}

i128 ParseDigits(std::string_view s, std::string_view whole, int* digits) {
  i128 value = 0;
  *digits = 0;
  for (char c : s) {
    if (c < '0' || c > '9') BadNumber(whole);
    value = Mul(value, 10) + (c - '0');
    ++*digits;
  }
  return value;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  Require(den != 0, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::Parse(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) BadNumber(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational a = Parse(s.substr(0, slash));
    Rational b = Parse(s.substr(slash + 1));
    if (b.num() == 0) Fail(ErrorCode::kFormat, "zero denominator in '" + std::string(text) + "'");
    return a / b;
  }
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    int exp_digits = 0;
    i128 magnitude = ParseDigits(exp_text, text, &exp_digits);
    if (exp_digits == 0 || magnitude > 36) BadNumber(text);
    exponent = static_cast<int>(exp_negative ? -magnitude : magnitude);
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  int int_digits = 0;
  int frac_digits = 0;
  i128 num = ParseDigits(int_part, text, &int_digits);
  i128 frac = ParseDigits(frac_part, text, &frac_digits);
  if (int_digits + frac_digits == 0) BadNumber(text);
  i128 den = 1;
  for (int i = 0; i < frac_digits; ++i) {
    num = Mul(num, 10);
    den = Mul(den, 10);
  }
  num += frac;
  for (; exponent > 0; --exponent) num = Mul(num, 10);
  for (; exponent < 0; ++exponent) den = Mul(den, 10);
  return Make(negative ? -num : num, den);
}

Rational Rational::FromDouble(double value, int64_t max_den) {
  Require(std::isfinite(value), "cannot convert non-finite value to rational");
  Require(max_den >= 1, "max_den must be positive");
  // Continued-fraction convergents.
  bool negative = value < 0;
  long double x = std::fabs(static_cast<long double>(value));
  Require(x < 9.0e18L, "value out of rational range");
  i128 p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double rem = x;
  for (int iter = 0; iter < 64; ++iter) {
    long double a_ld = std::floor(rem);
    i128 a = static_cast<i128>(a_ld);
    i128 p2 = a * p1 + p0;
    i128 q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    long double frac = rem - a_ld;
    if (frac < 1e-18L) break;
    if (std::fabs(static_cast<long double>(p1) / q1 - x) <=
        1e-17L * (x > 1 ? x : 1)) {
      break;
    }
    rem = 1.0L / frac;
  }
  if (q1 == 0) return Rational(0);
  return Make(negative ? -p1 : p1, q1);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Make(Mul(a.num_, b.den_) + Mul(b.num_, a.den_), Mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Make(Mul(a.num_, b.den_) - Mul(b.num_, a.den_), Mul(a.den_, b.den_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Make(Mul(a.num_, b.num_), Mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  Require(b.num_ != 0, "division by zero rational");
  return Make(Mul(a.num_, b.den_), Mul(a.den_, b.num_));
}

int Compare(const Rational& a, const Rational& b) {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace nmp
