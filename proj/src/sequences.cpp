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

#include "dedekind/sequences.hpp"

#include <algorithm>
#include <vector>
#include <utility>

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

void check_base(unsigned base) {
  if (base < kMinBase || base > kMaxBase) {
    throw DomainError("base " + std::to_string(base) + " outside 2..10");
  }
}

// Digits read as a base-`base` integer, most significant first.
Integer digits_as_integer(const DigitString& s) {
  Integer out = 0;
  for (Digit d : s.digits()) out = out * s.base() + d;
  return out;
}

}  // namespace

DigitString::DigitString(unsigned base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
  check_base(base_);
  for (Digit d : digits_) {
    if (d >= base_) {
      throw DomainError("digit " + std::to_string(d) + " out of range for base " +
                        std::to_string(base_));
    }
  }
}

DigitString DigitString::parse(unsigned base, std::string_view text) {
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw ParseError("expected a digit", i);
    digits.push_back(static_cast<Digit>(c - '0'));
  }
  return DigitString(base, std::move(digits));
}

bool DigitString::is_prefix_of(const DigitString& other) const {
  return base_ == other.base_ && digits_.size() <= other.digits_.size() &&
         std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

DigitString DigitString::concat(const DigitString& other) const {
  if (base_ != other.base_) throw DomainError("concatenating words of different bases");
  std::vector<Digit> out = digits_;
  out.insert(out.end(), other.digits_.begin(), other.digits_.end());
  return DigitString(base_, std::move(out));
}

std::string DigitString::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (Digit d : digits_) out.push_back(static_cast<char>('0' + d));
  return out;
}

SequenceSpec::SequenceSpec(DigitString preamble, DigitString period)
    : preamble_(std::move(preamble)), period_(std::move(period)) {
  if (preamble_.base() != period_.base()) {
    throw DomainError("preamble and period use different bases");
  }
  if (period_.empty()) throw DomainError("period must be nonempty");
}

SequenceSpec::SequenceSpec(unsigned base, std::string_view preamble, std::string_view period)
    : SequenceSpec(DigitString::parse(base, preamble), DigitString::parse(base, period)) {}

Digit SequenceSpec::digit_at(std::size_t index) const {
  if (index == 0) throw DomainError("digit positions are 1-indexed");
  const std::size_t i = index - 1;
  if (i < preamble_.size()) return preamble_[i];
  return period_[(i - preamble_.size()) % period_.size()];
}

bool SequenceSpec::is_canonical() const { return canonicalize(*this) == *this; }

DigitString prefix(const SequenceSpec& spec, std::size_t n) {
  std::vector<Digit> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(spec.digit_at(i));
  return DigitString(spec.base(), std::move(out));
}

Rational finite_value(const DigitString& digits) {
  return Rational(digits_as_integer(digits), integer_power(digits.base(), digits.size()));
}

Rational value_exact(const SequenceSpec& spec) {
  const unsigned base = spec.base();
  const Integer scale = integer_power(base, spec.preamble().size());
  const Integer repeat = integer_power(base, spec.period().size()) - 1;
  const Rational head(digits_as_integer(spec.preamble()), scale);
  const Rational tail(digits_as_integer(spec.period()), scale * repeat);
  return head + tail;
}

SequenceSpec expand(const Rational& q, unsigned base) {
  check_base(base);
  if (q < Rational(0) || q > Rational(1)) {
    throw DomainError("value " + q.to_string() + " outside [0, 1]");
  }
  if (q.is_zero()) return SequenceSpec(DigitString(base), DigitString(base, {0}));

  // Split den = coprime * rest where coprime shares no factor with base. The
  // remainders repeat from the first index i with rest | base^i, with period
  // the multiplicative order of base modulo coprime.
  const Integer& den = q.denominator();
  Integer coprime = den;
  for (Integer g = gcd(coprime, Integer(base)); g != 1; g = gcd(coprime, Integer(base))) {
    coprime /= g;
  }
  const Integer rest = den / coprime;
  std::size_t head_length = 0;
  for (Integer power = 1; power % rest != 0; power *= base) ++head_length;
  std::size_t cycle_length = 1;
  for (Integer x = Integer(base) % coprime; x != 1 % coprime; x = x * base % coprime) {
    ++cycle_length;
  }

  // Remainder r = n / den stays in (0, 1]; the digit is ceil(r * base) - 1,
  // which yields the nonterminating form directly.
  Integer n = q.numerator();
  std::vector<Digit> digits;
  digits.reserve(head_length + cycle_length);
  Integer scaled, ceil_quotient;
  while (digits.size() < head_length + cycle_length) {
    scaled = n * base;
    mpz_cdiv_q(ceil_quotient.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    const unsigned long digit = ceil_quotient.get_ui() - 1;
    digits.push_back(static_cast<Digit>(digit));
    n = scaled - digit * den;
  }
  const auto split = static_cast<std::ptrdiff_t>(head_length);
  std::vector<Digit> head(digits.begin(), digits.begin() + split);
  std::vector<Digit> cycle(digits.begin() + split, digits.end());
  return canonicalize(
      SequenceSpec(DigitString(base, std::move(head)), DigitString(base, std::move(cycle))));
}

SequenceSpec canonicalize(const SequenceSpec& spec) {
  const unsigned base = spec.base();
  std::vector<Digit> period = spec.period().digits();
  std::vector<Digit> preamble = spec.preamble().digits();

  const std::size_t k = period.size();
  for (std::size_t p = 1; p <= k; ++p) {
    if (k % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < k && repeats; ++i) repeats = period[i] == period[i - p];
    if (repeats) {
      period.resize(p);
      break;
    }
  }

  while (!preamble.empty() && preamble.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    preamble.pop_back();
  }
  return SequenceSpec(DigitString(base, std::move(preamble)), DigitString(base, std::move(period)));
}

SequenceSpec change_basis(const SequenceSpec& spec, unsigned target_base) {
  return expand(value_exact(spec), target_base);
}

}  // namespace dedekind
