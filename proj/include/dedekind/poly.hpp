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

#ifndef DEDEKIND_POLY_HPP_
#define DEDEKIND_POLY_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "dedekind/rational.hpp"

namespace dedekind {

// Polynomial in one variable with exact rational coefficients. Zero
// coefficients are never stored, so the zero polynomial is the empty map.
class Poly {
 public:
  using Exponent = std::uint32_t;
  using Terms = std::map<Exponent, Rational>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(runtime/explicit)
  explicit Poly(Terms terms);

  static Poly monomial(const Rational& coefficient, Exponent exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // Defined for nonzero polynomials only.
  Exponent degree() const { return terms_.rbegin()->first; }
  Exponent low_degree() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }
  const Rational& low_coefficient() const { return terms_.begin()->second; }

  Rational coefficient(Exponent exponent) const;

  // Exact value at a rational point.
  Rational evaluate(const Rational& t) const;

  Poly scaled(const Rational& factor) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  // Terms in ascending exponent, e.g. "1 + 2*e - e^3", with `variable` naming
  // the indeterminate.
  std::string to_string(char variable = 'e') const;

 private:
  Terms terms_;
};

// Euclidean division; throws ArithmeticError when divisor is zero.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace dedekind

#endif  // DEDEKIND_POLY_HPP_
