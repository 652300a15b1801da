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

#ifndef DEDEKIND_DEDEKIND_SET_HPP_
#define DEDEKIND_DEDEKIND_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "dedekind/hyperreal.hpp"
#include "dedekind/rational.hpp"
#include "dedekind/sequences.hpp"

namespace dedekind {

inline constexpr std::size_t kDefaultDepth = 64;

// Symbolic cardinality verdict. Nothing here is ever materialised; the
// verdicts transcribe the theory for an abstract hypercontinuous field.
class CardinalClass {
 public:
  enum class Kind { kFinite, kAleph, kSameAsInfinitesimals };

  // Throws DomainError for k == 0.
  static CardinalClass finite(std::uint64_t k);
  static CardinalClass aleph(std::uint64_t k);
  static CardinalClass same_as_infinitesimals();

  Kind kind() const { return kind_; }
  std::uint64_t index() const { return index_; }

  // "Finite(1)", "Aleph(1)", "SameAsInfinitesimals".
  std::string to_string() const;

  friend bool operator==(const CardinalClass&, const CardinalClass&) = default;

 private:
  CardinalClass(Kind kind, std::uint64_t index) : kind_(kind), index_(index) {}

  Kind kind_;
  std::uint64_t index_;
};

enum class DedekindCase {
  kRealCase,
  kDistinctStdCase,
  kEqualStdCase,
  kInfinitelySeparatedCase,
};

const char* to_string(DedekindCase c);

// Ordered field the halving chain lives in. Over the rationals the chain
// intersection is a single point; over the hyperreal field it is thick.
enum class AmbientField { kRational, kHyperreal };

struct DedekindSetDescriptor {
  std::pair<Hyperreal, Hyperreal> endpoints;
  SequenceSpec spec;
  CardinalClass cardinality;
  std::optional<Rational> std_limit;
  bool contains_all_reals;
  DedekindCase case_tag;
};

// Case analysis for the Dedekind set of the chain over [a0, b0] driven by a
// base-2 spec. With AmbientField::kRational both endpoints must be standard
// and the result is the single-point real case.
// Throws DomainError unless a0 < b0.
DedekindSetDescriptor classify_dedekind_set(const Hyperreal& a0, const Hyperreal& b0,
                                            const SequenceSpec& spec,
                                            AmbientField ambient = AmbientField::kHyperreal);

// True iff a_n <= d <= b_n for every n <= depth of the chain driven by
// prefix(spec, depth).
bool membership_at_depth(const Hyperreal& d, const Hyperreal& a0, const Hyperreal& b0,
                         const SequenceSpec& spec, std::size_t depth = kDefaultDepth);

// value_exact(spec) + eps. Throws DomainError unless eps is zero or
// infinitesimal.
Hyperreal random_hyperreal(const SequenceSpec& spec, const Hyperreal& eps);

struct Decomposition {
  Rational std_part;
  Hyperreal infinitesimal_part;
};

// (std(h), h - std(h)). Throws ArithmeticError for unbounded h.
Decomposition decompose(const Hyperreal& h);

}  // namespace dedekind

#endif  // DEDEKIND_DEDEKIND_SET_HPP_
