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

#include "dedekind/poly.hpp"

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

void add_term(Poly::Terms& terms, Poly::Exponent exponent, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

Poly::Poly(Terms terms) {
  for (auto& [exponent, coefficient] : terms) {
    if (!coefficient.is_zero()) terms_.emplace(exponent, std::move(coefficient));
  }
}

Poly Poly::monomial(const Rational& coefficient, Exponent exponent) {
  return Poly(Terms{{exponent, coefficient}});
}

bool Poly::is_constant() const { return is_zero() || (terms_.size() == 1 && low_degree() == 0); }

Rational Poly::coefficient(Exponent exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::evaluate(const Rational& t) const {
  Rational out;
  for (const auto& [exponent, coefficient] : terms_) {
    out += coefficient * t.pow(exponent);
  }
  return out;
}

Poly Poly::scaled(const Rational& factor) const {
  if (factor.is_zero()) return Poly();
  Poly out;
  for (const auto& [exponent, coefficient] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), exponent, coefficient * factor);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [exponent, coefficient] : rhs.terms_) add_term(terms_, exponent, coefficient);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [exponent, coefficient] : rhs.terms_) add_term(terms_, exponent, -coefficient);
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly::Terms out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) add_term(out, el + er, cl * cr);
  }
  Poly result;
  result.terms_ = std::move(out);
  return result;
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

std::string Poly::to_string(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponent, coefficient] : terms_) {
    const bool negative = coefficient.sign() < 0;
    const Rational magnitude = coefficient.abs();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string power;
    if (exponent == 1) {
      power = std::string(1, variable);
    } else if (exponent > 1) {
      power = std::string(1, variable) + "^" + std::to_string(exponent);
    }
    if (power.empty()) {
      out += magnitude.to_string();
    } else if (magnitude == Rational(1)) {
      out += power;
    } else {
      out += magnitude.to_string() + "*" + power;
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  Poly quotient;
  Poly remainder = dividend;
  const auto divisor_degree = divisor.degree();
  const Rational& lead = divisor.leading_coefficient();
  while (!remainder.is_zero() && remainder.degree() >= divisor_degree) {
    const Poly term =
        Poly::monomial(remainder.leading_coefficient() / lead, remainder.degree() - divisor_degree);
    quotient += term;
    remainder -= term * divisor;
  }
  return {std::move(quotient), std::move(remainder)};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(x.leading_coefficient().reciprocal());
}

}  // namespace dedekind
