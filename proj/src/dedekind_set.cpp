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

#include "dedekind/dedekind_set.hpp"

#include "dedekind/bisection.hpp"
#include "dedekind/errors.hpp"

namespace dedekind {

CardinalClass CardinalClass::finite(std::uint64_t k) {
  if (k == 0) throw DomainError("Finite(k) needs k >= 1");
  return CardinalClass(Kind::kFinite, k);
}

CardinalClass CardinalClass::aleph(std::uint64_t k) { return CardinalClass(Kind::kAleph, k); }

CardinalClass CardinalClass::same_as_infinitesimals() {
  return CardinalClass(Kind::kSameAsInfinitesimals, 0);
}

std::string CardinalClass::to_string() const {
  switch (kind_) {
    case Kind::kFinite:
      return "Finite(" + std::to_string(index_) + ")";
    case Kind::kAleph:
      return "Aleph(" + std::to_string(index_) + ")";
    case Kind::kSameAsInfinitesimals:
      return "SameAsInfinitesimals";
  }
  return "?";
}

const char* to_string(DedekindCase c) {
  switch (c) {
    case DedekindCase::kRealCase:
      return "RealCase";
    case DedekindCase::kDistinctStdCase:
      return "DistinctStdCase";
    case DedekindCase::kEqualStdCase:
      return "EqualStdCase";
    case DedekindCase::kInfinitelySeparatedCase:
      return "InfinitelySeparatedCase";
  }
  return "?";
}

DedekindSetDescriptor classify_dedekind_set(const Hyperreal& a0, const Hyperreal& b0,
                                            const SequenceSpec& spec, AmbientField ambient) {
  if (!(a0 < b0)) throw DomainError("Dedekind set requires a0 < b0");
  if (spec.base() != 2) throw DomainError("Dedekind sets are driven by base-2 sequences");

  DedekindSetDescriptor out{{a0, b0}, spec, CardinalClass::same_as_infinitesimals(),
                            std::nullopt, false, DedekindCase::kInfinitelySeparatedCase};

  if (ambient == AmbientField::kRational) {
    if (!a0.is_standard() || !b0.is_standard()) {
      throw DomainError("the rational ambient field needs rational endpoints");
    }
    out.case_tag = DedekindCase::kRealCase;
    out.cardinality = CardinalClass::finite(1);
    out.std_limit = dedekind_value(a0.standard_value(), b0.standard_value(), spec);
    return out;
  }

  if (!closeness(Closeness::kFinitelyDistant, a0, b0)) {
    out.contains_all_reals = true;
    return out;
  }

  const bool finite_endpoints = is_finite(a0) && is_finite(b0);
  if (standard_part(b0 - a0).is_zero()) {
    out.case_tag = DedekindCase::kEqualStdCase;
    if (finite_endpoints) out.std_limit = standard_part(a0);
  } else {
    out.case_tag = DedekindCase::kDistinctStdCase;
    if (finite_endpoints) {
      out.std_limit = dedekind_value(standard_part(a0), standard_part(b0), spec);
    }
  }
  return out;
}

bool membership_at_depth(const Hyperreal& d, const Hyperreal& a0, const Hyperreal& b0,
                         const SequenceSpec& spec, std::size_t depth) {
  const auto chain = interval_chain(a0, b0, prefix(spec, depth));
  if (!chain.start.contains(d)) return false;
  for (const auto& step : chain.steps) {
    if (!step.contains(d)) return false;
  }
  return true;
}

Hyperreal random_hyperreal(const SequenceSpec& spec, const Hyperreal& eps) {
  const Magnitude m = classify(eps);
  if (m != Magnitude::kZero && m != Magnitude::kInfinitesimal) {
    throw DomainError("random_hyperreal needs an infinitesimal offset, got " + eps.to_string());
  }
  return Hyperreal(value_exact(spec)) + eps;
}

Decomposition decompose(const Hyperreal& h) {
  Rational s = standard_part(h);
  Hyperreal rest = h - Hyperreal(s);
  return {std::move(s), std::move(rest)};
}

}  // namespace dedekind
