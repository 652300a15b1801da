// Copyright 2026 The Dedekind Authors.
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

#ifndef DEDEKIND_RATIONAL_HPP_
#define DEDEKIND_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace dedekind {

using Integer = mpz_class;

// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  explicit Rational(const Integer& value) : value_(value) {}
  // Throws DomainError when `denominator` is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  // Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational abs() const;
  Rational reciprocal() const;  // throws ArithmeticError on zero
  Rational pow(long exponent) const;
  Rational half() const;

  // Nearest double; for reporting only.
  double to_double() const { return value_.get_d(); }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws ArithmeticError on zero

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

// Halving hook used by the generic bisection code.
inline Rational halve(const Rational& x) { return x.half(); }

// base^exponent as an exact integer.
Integer integer_power(unsigned base, std::uint64_t exponent);

}  // namespace dedekind

#endif  // DEDEKIND_RATIONAL_HPP_
