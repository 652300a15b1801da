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

#ifndef DEDEKIND_BISECTION_HPP_
#define DEDEKIND_BISECTION_HPP_

#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

#include "dedekind/errors.hpp"
#include "dedekind/rational.hpp"
#include "dedekind/sequences.hpp"

namespace dedekind {

// Exact chain-ordered scalar supporting the operations the halving recursion
// needs. `halve` is found by argument-dependent lookup.
template <typename S>
concept Scalar = std::totally_ordered<S> && std::copyable<S> && requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { halve(a) } -> std::convertible_to<S>;
};

template <Scalar S>
struct Interval {
  S lo;
  S hi;

  // Throws DomainError unless lo < hi.
  Interval(S lo_, S hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw DomainError("interval requires lo < hi");
  }

  S width() const { return hi - lo; }
  S midpoint() const { return halve(lo + hi); }
  bool contains(const S& x) const { return !(x < lo) && !(hi < x); }
  bool contains(const Interval& other) const { return !(other.lo < lo) && !(hi < other.hi); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

template <Scalar S>
struct IntervalChain {
  Interval<S> start;
  DigitString bits;
  // steps[k] is the interval after k+1 halvings.
  std::vector<Interval<S>> steps;

  const Interval<S>& final_interval() const { return steps.empty() ? start : steps.back(); }
};

inline void check_bit(Digit bit) {
  if (bit > 1) throw DomainError("bisection bits must be 0 or 1");
}

// Bit 0 keeps the lower half, bit 1 the upper half.
template <Scalar S>
Interval<S> bisect_step(const Interval<S>& iv, Digit bit) {
  check_bit(bit);
  S mid = iv.midpoint();
  return bit == 0 ? Interval<S>(iv.lo, std::move(mid)) : Interval<S>(std::move(mid), iv.hi);
}

template <Scalar S>
IntervalChain<S> interval_chain(const S& a0, const S& b0, const DigitString& bits) {
  if (bits.base() != 2) throw DomainError("interval chains need a base-2 word");
  IntervalChain<S> chain{Interval<S>(a0, b0), bits, {}};
  chain.steps.reserve(bits.size());
  const Interval<S>* current = &chain.start;
  for (Digit bit : bits.digits()) {
    chain.steps.push_back(bisect_step(*current, bit));
    current = &chain.steps.back();
  }
  return chain;
}

// T(x) = (x - a0) / (b0 - a0).
template <Scalar S>
S affine_to_unit(const S& x, const S& a0, const S& b0) {
  if (!(a0 < b0)) throw DomainError("affine map requires a0 < b0");
  return (x - a0) / (b0 - a0);
}

// Inverse of affine_to_unit: (b0 - a0) x + a0.
template <Scalar S>
S affine_from_unit(const S& x, const S& a0, const S& b0) {
  if (!(a0 < b0)) throw DomainError("affine map requires a0 < b0");
  return (b0 - a0) * x + a0;
}

// The unique point in every interval of the chain over [a0, b0] driven by a
// base-2 sequence: a0 + (b0 - a0) * v2(spec).
Rational dedekind_value(const Rational& a0, const Rational& b0, const SequenceSpec& spec);

// Bits whose chain over [a0, b0] keeps c in every interval. A midpoint tie
// picks the lower half, matching the nonterminating expansion of T(c).
template <Scalar S>
DigitString encode(const S& c, const S& a0, const S& b0, std::size_t depth) {
  Interval<S> current(a0, b0);
  if (!current.contains(c)) throw DomainError("value outside [a0, b0]");
  std::vector<Digit> bits;
  bits.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const Digit bit = c <= current.midpoint() ? 0 : 1;
    bits.push_back(bit);
    current = bisect_step(current, bit);
  }
  return DigitString(2, std::move(bits));
}

}  // namespace dedekind

#endif  // DEDEKIND_BISECTION_HPP_
