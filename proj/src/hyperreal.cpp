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

#include "dedekind/hyperreal.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <utility>

#include "dedekind/errors.hpp"

namespace dedekind {

Hyperreal::Hyperreal(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("hyperreal with zero denominator");
  normalize();
}

Hyperreal Hyperreal::epsilon() { return Hyperreal(Poly::monomial(Rational(1), 1), Rational(1)); }

void Hyperreal::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Poly common = gcd(num_, den_);
    if (!common.is_constant()) {
      num_ = divmod(num_, common).first;
      den_ = divmod(den_, common).first;
    }
  }
  const Rational scale = den_.low_coefficient();
  if (scale != Rational(1)) {
    const Rational inverse = scale.reciprocal();
    num_ = num_.scaled(inverse);
    den_ = den_.scaled(inverse);
  }
}

Rational Hyperreal::standard_value() const {
  if (!is_standard()) throw DomainError("element is not a standard rational");
  return num_.coefficient(0) / den_.coefficient(0);
}

int Hyperreal::sign() const { return is_zero() ? 0 : num_.low_coefficient().sign(); }

std::optional<std::int64_t> Hyperreal::valuation() const {
  if (is_zero()) return std::nullopt;
  return static_cast<std::int64_t>(num_.low_degree()) - static_cast<std::int64_t>(den_.low_degree());
}

Hyperreal Hyperreal::reciprocal() const {
  if (is_zero()) throw ArithmeticError("reciprocal of zero");
  return Hyperreal(den_, num_);
}

Hyperreal Hyperreal::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  Hyperreal result(1);
  Hyperreal base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string Hyperreal::to_string() const {
  if (is_standard()) return standard_value().to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Hyperreal& Hyperreal::operator+=(const Hyperreal& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

Hyperreal& Hyperreal::operator-=(const Hyperreal& rhs) { return *this += -rhs; }

Hyperreal& Hyperreal::operator*=(const Hyperreal& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

Hyperreal& Hyperreal::operator/=(const Hyperreal& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  normalize();
  return *this;
}

Hyperreal Hyperreal::operator-() const {
  Hyperreal out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Hyperreal& lhs, const Hyperreal& rhs) {
  const int s = (lhs - rhs).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Hyperreal arithmetic(ArithmeticKind kind, const Hyperreal& x, const Hyperreal& y) {
  switch (kind) {
    case ArithmeticKind::kAdd:
      return x + y;
    case ArithmeticKind::kSub:
      return x - y;
    case ArithmeticKind::kMul:
      return x * y;
    case ArithmeticKind::kDiv:
      return x / y;
  }
  throw DomainError("unknown arithmetic kind");
}

Comparison compare(const Hyperreal& x, const Hyperreal& y) {
  const auto order = x <=> y;
  if (order < 0) return Comparison::kLess;
  if (order > 0) return Comparison::kGreater;
  return Comparison::kEqual;
}

Magnitude classify(const Hyperreal& x) {
  const auto val = x.valuation();
  if (!val) return Magnitude::kZero;
  if (*val > 0) return Magnitude::kInfinitesimal;
  if (*val < 0) return Magnitude::kUnbounded;
  return Magnitude::kAppreciable;
}

bool is_finite(const Hyperreal& x) { return classify(x) != Magnitude::kUnbounded; }

Rational standard_part(const Hyperreal& x) {
  switch (classify(x)) {
    case Magnitude::kZero:
    case Magnitude::kInfinitesimal:
      return Rational(0);
    case Magnitude::kAppreciable:
      // Valuation 0 in lowest terms forces both constant terms to be nonzero.
      return x.numerator().coefficient(0) / x.denominator().coefficient(0);
    case Magnitude::kUnbounded:
      break;
  }
  throw ArithmeticError("unbounded element " + x.to_string() + " has no standard part");
}

bool closeness(Closeness mode, const Hyperreal& x, const Hyperreal& y) {
  const Magnitude m = classify(x - y);
  if (mode == Closeness::kInfinitesimallyClose) {
    return m == Magnitude::kZero || m == Magnitude::kInfinitesimal;
  }
  return m != Magnitude::kUnbounded;
}

ArchimedeanResult archimedean_check(const Hyperreal& a, const Hyperreal& b, std::uint64_t n_max) {
  if (n_max == 0) throw DomainError("archimedean_check needs n_max >= 1");

  // n*a - b = (n*P - Q) / (Da*Db) with P = A*Db, Q = B*Da. Both denominators
  // have lowest coefficient 1, so the sign is that of the lowest nonzero
  // coefficient of n*P - Q.
  const Poly p = a.numerator() * b.denominator();
  const Poly q = b.numerator() * a.denominator();
  std::set<Poly::Exponent> exponents;
  for (const auto& term : p.terms()) exponents.insert(term.first);
  for (const auto& term : q.terms()) exponents.insert(term.first);
  std::vector<std::pair<Rational, Rational>> columns;
  columns.reserve(exponents.size());
  for (Poly::Exponent k : exponents) columns.emplace_back(p.coefficient(k), q.coefficient(k));

  ArchimedeanResult result{std::nullopt, ArchimedeanVerdict::kInconclusive};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Rational multiplier(Integer(std::to_string(n), 10));
    int s = 0;
    for (const auto& [pk, qk] : columns) {
      s = (multiplier * pk - qk).sign();
      if (s != 0) break;
    }
    if (s > 0) {
      result.exceeded_at = n;
      break;
    }
  }

  const int sa = a.sign();
  if (sa > 0) {
    const bool dominated = b.sign() > 0 && *a.valuation() > *b.valuation();
    result.verdict =
        dominated ? ArchimedeanVerdict::kBoundedForever : ArchimedeanVerdict::kEventuallyExceeds;
  } else {
    // Multiples of a non-positive a never exceed a itself.
    result.verdict =
        a > b ? ArchimedeanVerdict::kEventuallyExceeds : ArchimedeanVerdict::kBoundedForever;
  }
  return result;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, bool allow_calls)
      : text_(text), allow_calls_(allow_calls) {}

  Hyperreal parse() {
    Hyperreal value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  static constexpr long kMaxExponent = 4096;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer integer() {
    if (!peek_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Hyperreal expr() {
    Hyperreal value = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        value += term();
      } else if (peek('-')) {
        ++pos_;
        value -= term();
      } else {
        return value;
      }
    }
  }

  Hyperreal term() {
    Hyperreal value = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        value *= factor();
      } else if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        Hyperreal divisor = factor();
        if (divisor.is_zero()) throw ArithmeticError("division by zero at position " + std::to_string(at));
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Hyperreal factor() {
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    Hyperreal base = atom();
    if (!peek('^')) return base;
    ++pos_;
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    const Integer magnitude = integer();
    if (magnitude > kMaxExponent) fail("exponent too large");
    const long exponent = magnitude.get_si();
    if (negative && base.is_zero()) throw ArithmeticError("zero raised to a negative power");
    return base.pow(negative ? -exponent : exponent);
  }

  Hyperreal atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Hyperreal value = expr();
      expect(')');
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (c == 'e' && !identifier_follows(pos_ + 1)) {
      ++pos_;
      return Hyperreal::epsilon();
    }
    if (allow_calls_ && text_.substr(pos_, 3) == "std" && !identifier_follows(pos_ + 3)) {
      pos_ += 3;
      expect('(');
      Hyperreal argument = expr();
      expect(')');
      return Hyperreal(standard_part(argument));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  // Literal rationals are greedy: "2/3" is one atom wherever it appears.
  Hyperreal rational() {
    const Integer num = integer();
    const std::size_t mark = pos_;
    if (peek('/')) {
      ++pos_;
      if (peek_digit()) {
        const std::size_t at = pos_;
        const Integer den = integer();
        if (den == 0) throw ParseError("denominator must be positive", at);
        return Hyperreal(Rational(num, den));
      }
      pos_ = mark;
    }
    return Hyperreal(Rational(num));
  }

  bool identifier_follows(std::size_t at) const {
    return at < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[at])) || text_[at] == '_');
  }

  std::string_view text_;
  bool allow_calls_;
  std::size_t pos_ = 0;
};

}  // namespace

Hyperreal parse_hyperreal(std::string_view text) { return ExpressionParser(text, false).parse(); }

Hyperreal evaluate_expression(std::string_view text) { return ExpressionParser(text, true).parse(); }

const char* to_string(Magnitude magnitude) {
  switch (magnitude) {
    case Magnitude::kZero:
      return "Zero";
    case Magnitude::kInfinitesimal:
      return "Infinitesimal";
    case Magnitude::kAppreciable:
      return "Appreciable";
    case Magnitude::kUnbounded:
      return "Unbounded";
  }
  return "?";
}

const char* to_string(Comparison comparison) {
  switch (comparison) {
    case Comparison::kLess:
      return "less";
    case Comparison::kEqual:
      return "equal";
    case Comparison::kGreater:
      return "greater";
  }
  return "?";
}

const char* to_string(ArchimedeanVerdict verdict) {
  switch (verdict) {
    case ArchimedeanVerdict::kBoundedForever:
      return "bounded_forever";
    case ArchimedeanVerdict::kEventuallyExceeds:
      return "eventually_exceeds";
    case ArchimedeanVerdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace dedekind
