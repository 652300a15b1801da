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

#ifndef DEDEKIND_HYPERREAL_HPP_
#define DEDEKIND_HYPERREAL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "dedekind/poly.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

// Element of the field Q(e) of rational functions in a positive
// infinitesimal e, ordered by behaviour as e -> 0+.
//
// Normal form: num and den are coprime and the lowest-degree coefficient of
// den is exactly 1. Two elements are equal iff their normal forms are
// identical, and the sign of a nonzero element is the sign of the
// lowest-degree coefficient of num.
class Hyperreal {
 public:
  Hyperreal() : den_(Rational(1)) {}
  Hyperreal(const Rational& value) : num_(value), den_(Rational(1)) {}  // NOLINT(runtime/explicit)
  Hyperreal(long value) : Hyperreal(Rational(value)) {}                  // NOLINT(runtime/explicit)
  // Throws ArithmeticError when den is zero.
  Hyperreal(Poly num, Poly den);

  // The infinitesimal e itself.
  static Hyperreal epsilon();

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_standard() const { return num_.is_constant() && den_.is_constant(); }
  // Requires is_standard().
  Rational standard_value() const;

  int sign() const;
  // lowdeg(num) - lowdeg(den); empty for zero.
  std::optional<std::int64_t> valuation() const;

  Hyperreal reciprocal() const;  // throws ArithmeticError on zero
  Hyperreal pow(long exponent) const;

  // Canonical text: pure rationals as "p/q", otherwise "(num) / (den)" with
  // terms in ascending exponent, e.g. "(1 + 2*e) / (e^2)".
  std::string to_string() const;

  Hyperreal& operator+=(const Hyperreal& rhs);
  Hyperreal& operator-=(const Hyperreal& rhs);
  Hyperreal& operator*=(const Hyperreal& rhs);
  Hyperreal& operator/=(const Hyperreal& rhs);
  friend Hyperreal operator+(Hyperreal lhs, const Hyperreal& rhs) { return lhs += rhs; }
  friend Hyperreal operator-(Hyperreal lhs, const Hyperreal& rhs) { return lhs -= rhs; }
  friend Hyperreal operator*(Hyperreal lhs, const Hyperreal& rhs) { return lhs *= rhs; }
  friend Hyperreal operator/(Hyperreal lhs, const Hyperreal& rhs) { return lhs /= rhs; }
  Hyperreal operator-() const;

  friend bool operator==(const Hyperreal&, const Hyperreal&) = default;
  friend std::strong_ordering operator<=>(const Hyperreal& lhs, const Hyperreal& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Hyperreal& x) {
    return os << x.to_string();
  }

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

inline Hyperreal halve(const Hyperreal& x) { return x * Hyperreal(Rational(1, 2)); }

enum class ArithmeticKind { kAdd, kSub, kMul, kDiv };

Hyperreal arithmetic(ArithmeticKind kind, const Hyperreal& x, const Hyperreal& y);

enum class Comparison { kLess, kEqual, kGreater };

Comparison compare(const Hyperreal& x, const Hyperreal& y);

enum class Magnitude { kZero, kInfinitesimal, kAppreciable, kUnbounded };

Magnitude classify(const Hyperreal& x);

bool is_finite(const Hyperreal& x);

// The unique rational infinitely close to a finite x. Throws ArithmeticError
// for unbounded x.
Rational standard_part(const Hyperreal& x);

enum class Closeness { kInfinitesimallyClose, kFinitelyDistant };

bool closeness(Closeness mode, const Hyperreal& x, const Hyperreal& y);

enum class ArchimedeanVerdict { kBoundedForever, kEventuallyExceeds, kInconclusive };

struct ArchimedeanResult {
  // Smallest n in 1..n_max with n*a > b, if any.
  std::optional<std::uint64_t> exceeded_at;
  ArchimedeanVerdict verdict;
};

// Scans n = 1..n_max for n*a > b and reports whether the multiples of a ever
// exceed b. Throws DomainError when n_max is zero.
ArchimedeanResult archimedean_check(const Hyperreal& a, const Hyperreal& b, std::uint64_t n_max);

// Parses the hyperreal expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' integer)? | '-' factor
//   atom   := rational | 'e' | '(' expr ')'
// Throws ParseError on malformed text and ArithmeticError on division by zero.
Hyperreal parse_hyperreal(std::string_view text);

// Same grammar plus the call form std(expr) as an atom, which evaluates to
// the standard part of its argument.
Hyperreal evaluate_expression(std::string_view text);

const char* to_string(Magnitude magnitude);
const char* to_string(Comparison comparison);
const char* to_string(ArchimedeanVerdict verdict);

}  // namespace dedekind

#endif  // DEDEKIND_HYPERREAL_HPP_
