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

#ifndef DEDEKIND_SEQUENCES_HPP_
#define DEDEKIND_SEQUENCES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dedekind/rational.hpp"

namespace dedekind {

using Digit = std::uint8_t;

// Bases are limited to 2..10 so that every digit is a single ASCII glyph.
inline constexpr unsigned kMinBase = 2;
inline constexpr unsigned kMaxBase = 10;

// Finite word over the alphabet {0, ..., base-1}. The empty word is valid.
class DigitString {
 public:
  // Throws DomainError on a bad base or an out-of-range digit.
  explicit DigitString(unsigned base, std::vector<Digit> digits = {});

  // Parses ASCII digits; throws ParseError on a non-digit, DomainError on a
  // digit >= base.
  static DigitString parse(unsigned base, std::string_view text);

  unsigned base() const { return base_; }
  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  bool is_prefix_of(const DigitString& other) const;
  DigitString concat(const DigitString& other) const;

  std::string to_string() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
  friend auto operator<=>(const DigitString&, const DigitString&) = default;

 private:
  unsigned base_;
  std::vector<Digit> digits_;
};

// Eventually periodic infinite sequence preamble . period^inf over a base.
// Construction validates digits but does not canonicalize.
class SequenceSpec {
 public:
  // Throws DomainError when bases disagree or the period is empty.
  SequenceSpec(DigitString preamble, DigitString period);
  SequenceSpec(unsigned base, std::string_view preamble, std::string_view period);

  unsigned base() const { return preamble_.base(); }
  const DigitString& preamble() const { return preamble_; }
  const DigitString& period() const { return period_; }

  // 1-indexed digit of the infinite stream.
  Digit digit_at(std::size_t index) const;

  bool is_canonical() const;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  DigitString preamble_;
  DigitString period_;
};

// First n digits of the stream.
DigitString prefix(const SequenceSpec& spec, std::size_t n);

// Sum of d_i / base^i over the word.
Rational finite_value(const DigitString& digits);

// Value of the infinite expansion, in [0, 1].
Rational value_exact(const SequenceSpec& spec);

// Canonical nonterminating expansion of q in [0, 1]. Terminating values come
// back ending in repeated (base-1); zero comes back as period "0".
// Throws DomainError when q is outside [0, 1] or the base is unsupported.
SequenceSpec expand(const Rational& q, unsigned base);

// Minimal period, then minimal preamble. Preserves the digit stream.
SequenceSpec canonicalize(const SequenceSpec& spec);

// Same value expressed in target_base, canonical and nonterminating.
SequenceSpec change_basis(const SequenceSpec& spec, unsigned target_base);

}  // namespace dedekind

#endif  // DEDEKIND_SEQUENCES_HPP_
