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

#ifndef DEDEKIND_RANDOMNESS_HPP_
#define DEDEKIND_RANDOMNESS_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dedekind/rational.hpp"
#include "dedekind/sequences.hpp"

namespace dedekind {

// Finite set of words over one base; duplicates collapse.
class StringSet {
 public:
  explicit StringSet(unsigned base) : base_(base) {}
  // Throws DomainError when a word uses a different base.
  StringSet(unsigned base, const std::vector<DigitString>& strings);

  void insert(const DigitString& s);

  unsigned base() const { return base_; }
  const std::set<DigitString>& strings() const { return strings_; }
  bool empty() const { return strings_.empty(); }

  // Drops every word that has a proper prefix in the set.
  StringSet pruned() const;

 private:
  unsigned base_;
  std::set<DigitString> strings_;
};

// Lebesgue measure of the union of cylinders over xs.
Rational cylinder_measure(const StringSet& xs);

// True iff some word of xs is a prefix of the spec's stream. Throws
// DomainError when bases differ.
bool covers(const SequenceSpec& spec, const StringSet& xs);

// Finite truncation of a Martin-Löf test: level k is the open set generated
// by levels[k], with measure bound bounds[k].
class NullCoverSpec {
 public:
  // Throws DomainError when the lengths differ, a level uses another base, a
  // bound is not positive, or the bounds increase.
  NullCoverSpec(unsigned base, std::vector<StringSet> levels, std::vector<Rational> bounds);

  unsigned base() const { return base_; }
  const std::vector<StringSet>& levels() const { return levels_; }
  const std::vector<Rational>& bounds() const { return bounds_; }

 private:
  unsigned base_;
  std::vector<StringSet> levels_;
  std::vector<Rational> bounds_;
};

struct NullCoverVerdict {
  // Every level has measure <= bound <= 2^-k (k 1-indexed).
  bool valid;
  std::vector<Rational> level_measures;
  // Empty without a target.
  std::vector<bool> covered_at;
  // valid and covered at every level.
  bool target_exhibited_nonrandom;
};

NullCoverVerdict verify_null_cover(const NullCoverSpec& cover,
                                   const std::optional<SequenceSpec>& target = std::nullopt);

// The cover whose level k is the prefix of the spec's stream of length
// |preamble| + k * |period|, with bound 2^-k. Valid for every spec, so every
// eventually periodic sequence is exhibited as non-random.
NullCoverSpec self_prefix_cover(const SequenceSpec& spec, std::size_t levels);

struct RationalVerdict {
  Rational value;
};
struct UnknownVerdict {};
using RationalityVerdict = std::variant<RationalVerdict, UnknownVerdict>;

// Every eventually periodic sequence has a rational value.
RationalityVerdict rationality_verdict(const SequenceSpec& spec);
// A finite prefix decides nothing.
RationalityVerdict rationality_verdict(const DigitString& prefix);

struct BatteryConfig {
  double alpha = 0.01;
  std::vector<std::size_t> block_sizes = {16, 128};
  unsigned serial_pattern_length = 3;
};

struct TestRecord {
  std::string name;
  // Exact rational statistic.
  std::string statistic;
  // Decimal p-value, six significant digits.
  std::string p_value;
  std::string threshold;
  bool pass;
};

struct RandomnessReport {
  std::size_t sample_length;
  std::vector<TestRecord> records;
  // True when no test in the battery rejects. Never a claim of Martin-Löf
  // randomness.
  bool no_test_rejects;
};

inline constexpr std::size_t kMinBatteryLength = 128;

// Frequency, block frequency, runs, longest run of ones and serial tests over
// a binary sample. Throws DomainError for samples shorter than 128 bits,
// non-binary samples, or a bad config.
RandomnessReport battery(const DigitString& sample, const BatteryConfig& config = {});

// Reads ASCII '0'/'1', ignoring all whitespace. Throws ParseError on any
// other character.
DigitString parse_bit_sample(std::string_view text);

struct RelativeWitness {
  Rational w;
  SequenceSpec expansion_in_outer;
  bool expansions_differ;
};

// The point w of [a2, b2] whose encoding relative to [a2, b2] is spec, and
// its encoding relative to the enclosing [a1, b1]. Throws DomainError unless
// [a2, b2] is strictly inside [a1, b1].
RelativeWitness relative_random_witness(const Rational& a1, const Rational& b1,
                                        const Rational& a2, const Rational& b2,
                                        const SequenceSpec& spec);

}  // namespace dedekind

#endif  // DEDEKIND_RANDOMNESS_HPP_
