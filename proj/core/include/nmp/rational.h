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

#ifndef NMP_RATIONAL_H_
#define NMP_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace nmp {

// Exact rational with 64-bit numerator and positive 64-bit denominator, kept
// in lowest terms. Arithmetic is carried out in 128 bits and fails with
// ErrorCode::kInvalidArgument if the reduced result does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t num, int64_t den = 1);

  // Accepts "a/b", integers, and plain decimals such as "0.3" or "1e-2".
  // Decimal input is converted exactly (0.3 becomes 3/10).
  static Rational Parse(std::string_view text);

  // Best rational approximation with denominator at most `max_den`.
  static Rational FromDouble(double value, int64_t max_den = 1'000'000'000);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend int Compare(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) {
    return Compare(a, b) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return Compare(a, b) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return Compare(a, b) > 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return Compare(a, b) >= 0;
  }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace nmp

#endif  // NMP_RATIONAL_H_
