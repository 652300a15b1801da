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

#include "dedekind/bisection.hpp"

#include <gtest/gtest.h>

#include <map>
#include <string>

#include "dedekind/hyperreal.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace dedekind {
namespace {

using testing::Gen;

static_assert(Scalar<Rational>);
static_assert(Scalar<Hyperreal>);
static_assert(!Scalar<int*>);

using Q = Interval<Rational>;

DigitString bits(std::string_view text) { return DigitString::parse(2, text); }

TEST(BisectStep, Examples) {
  EXPECT_EQ(bisect_step(Q(0, 1), 0), Q(0, Rational(1, 2)));
  EXPECT_EQ(bisect_step(Q(0, 1), 1), Q(Rational(1, 2), 1));
  // Midpoint of [1/2, 3/4] is 5/8.
  EXPECT_EQ((Rational(1, 2) + Rational(3, 4)) / Rational(2), Rational(5, 8));
  EXPECT_EQ(bisect_step(Q(Rational(1, 2), Rational(3, 4)), 1), Q(Rational(5, 8), Rational(3, 4)));
  EXPECT_THROW(bisect_step(Q(0, 1), 2), DomainError);
}

TEST(Interval, RequiresStrictOrder) {
  EXPECT_THROW(Q(1, 1), DomainError);
  EXPECT_THROW(Q(2, 1), DomainError);
}

TEST(IntervalChain, Examples) {
  const auto c11 = interval_chain<Rational>(0, 1, bits("11"));
  ASSERT_EQ(c11.steps.size(), 2U);
  EXPECT_EQ(c11.steps[0], Q(Rational(1, 2), 1));
  EXPECT_EQ(c11.final_interval(), Q(Rational(3, 4), 1));

  const auto empty = interval_chain<Rational>(0, 1, DigitString(2));
  EXPECT_TRUE(empty.steps.empty());
  EXPECT_EQ(empty.final_interval(), Q(0, 1));

  const auto c010 = interval_chain<Rational>(0, 1, bits("010"));
  EXPECT_EQ(c010.steps[0], Q(0, Rational(1, 2)));
  EXPECT_EQ(c010.steps[1], Q(Rational(1, 4), Rational(1, 2)));
  EXPECT_EQ(c010.final_interval(), Q(Rational(1, 4), Rational(3, 8)));

  EXPECT_THROW(interval_chain<Rational>(1, 0, bits("0")), DomainError);
  EXPECT_THROW(interval_chain<Rational>(0, 1, DigitString::parse(3, "2")), DomainError);
}

// The recursive left/right-extreme formulation, evaluated literally.
Rational left_extreme(std::size_t n, const Rational& a, const Rational& b, const std::string& s);
Rational right_extreme(std::size_t n, const Rational& a, const Rational& b, const std::string& s) {
  if (n == 1) return s[0] == '0' ? (a + b) / Rational(2) : b;
  if (s[n - 1] == '0') {
    return (left_extreme(n - 1, a, b, s) + right_extreme(n - 1, a, b, s)) / Rational(2);
  }
  return right_extreme(n - 1, a, b, s);
}
Rational left_extreme(std::size_t n, const Rational& a, const Rational& b, const std::string& s) {
  if (n == 1) return s[0] == '0' ? a : (a + b) / Rational(2);
  if (s[n - 1] == '0') return left_extreme(n - 1, a, b, s);
  return (left_extreme(n - 1, a, b, s) + right_extreme(n - 1, a, b, s)) / Rational(2);
}

TEST(IntervalChain, MatchesRecursiveExtremes) {
  Gen gen(21);
  for (int i = 0; i < 50; ++i) {
    const Rational a = gen.rational();
    const Rational b = a + Rational(gen.integer(1, 9), gen.integer(1, 9));
    const std::string word = gen.digits(2, 1, 10);
    const auto chain = interval_chain(a, b, bits(word));
    for (std::size_t n = 1; n <= word.size(); ++n) {
      ASSERT_EQ(chain.steps[n - 1].lo, left_extreme(n, a, b, word));
      ASSERT_EQ(chain.steps[n - 1].hi, right_extreme(n, a, b, word));
    }
  }
}

TEST(IntervalChain, WidthLawAndNestingOverBothScalars) {
  Gen gen(22);
  for (int i = 0; i < 30; ++i) {
    const Rational a = gen.rational();
    const Rational b = a + Rational(gen.integer(1, 9), gen.integer(1, 9));
    const DigitString word = bits(gen.digits(2, 0, 128));
    const auto chain = interval_chain(a, b, word);
    Rational width = b - a;
    const Q* previous = &chain.start;
    for (const auto& step : chain.steps) {
      width = width.half();
      ASSERT_EQ(step.width(), width);
      ASSERT_TRUE(previous->contains(step));
      previous = &step;
    }

    const Hyperreal ha = Hyperreal(a) + gen.infinitesimal();
    const Hyperreal hb = Hyperreal(b) + gen.poly(-1, 2);
    if (!(ha < hb)) continue;
    const auto hchain = interval_chain(ha, hb, word);
    Hyperreal hwidth = hb - ha;
    const Interval<Hyperreal>* hprev = &hchain.start;
    for (const auto& step : hchain.steps) {
      hwidth = halve(hwidth);
      ASSERT_EQ(step.width(), hwidth);
      ASSERT_TRUE(hprev->contains(step));
      hprev = &step;
    }
  }
}

TEST(DedekindValue, Examples) {
  const SequenceSpec third(2, "", "01");
  EXPECT_EQ(dedekind_value(0, 1, third), Rational(1, 3));
  const auto chain = interval_chain<Rational>(0, 1, prefix(third, 64));
  for (const auto& step : chain.steps) EXPECT_TRUE(step.contains(Rational(1, 3)));

  EXPECT_EQ(dedekind_value(0, 1, SequenceSpec(2, "", "1")), Rational(1));

  const SequenceSpec half = expand(Rational(1, 2), 2);
  EXPECT_EQ(affine_from_unit<Rational>(Rational(1, 2), 2, 6), Rational(4));
  EXPECT_EQ(dedekind_value(2, 6, half), Rational(4));

  EXPECT_THROW(dedekind_value(1, 1, third), DomainError);
  EXPECT_THROW(dedekind_value(0, 1, SequenceSpec(3, "", "1")), DomainError);
}

TEST(DedekindValue, LiesInEveryChainInterval) {
  Gen gen(23);
  for (int i = 0; i < 100; ++i) {
    const SequenceSpec s = gen.spec(2);
    const Rational a = gen.rational();
    const Rational b = a + Rational(gen.integer(1, 9), gen.integer(1, 9));
    const Rational v = dedekind_value(a, b, s);
    ASSERT_EQ(affine_to_unit(v, a, b), value_exact(s));
    const auto chain = interval_chain(a, b, prefix(s, 96));
    for (const auto& step : chain.steps) ASSERT_TRUE(step.contains(v));
  }
}

TEST(DedekindValue, InjectiveOnCanonicalNonterminatingSpecs) {
  Gen gen(24);
  std::map<std::string, std::string> by_value;
  for (int i = 0; i < 400; ++i) {
    const SequenceSpec s = expand(value_exact(gen.spec(2, 4, 4)), 2);
    const std::string key = dedekind_value(0, 1, s).to_string();
    const std::string repr = s.preamble().to_string() + "|" + s.period().to_string();
    const auto [it, inserted] = by_value.emplace(key, repr);
    if (!inserted) ASSERT_EQ(it->second, repr);
  }
}

TEST(DedekindValue, DualDyadicRepresentationsCollide) {
  // Distinct streams, distinct chains, one common limit point.
  const SequenceSpec upper(2, "1", "0");
  const SequenceSpec lower(2, "0", "1");
  EXPECT_NE(prefix(upper, 4), prefix(lower, 4));
  EXPECT_EQ(dedekind_value(0, 1, upper), dedekind_value(0, 1, lower));
}

TEST(Encode, Examples) {
  EXPECT_EQ(encode<Rational>(Rational(3, 4), 0, 1, 6).to_string(), "101111");
  EXPECT_EQ(encode<Rational>(Rational(-2), -2, 5, 9).to_string(), "000000000");
  EXPECT_EQ(encode<Rational>(Rational(1, 3), 0, 1, 6).to_string(), "010101");
  EXPECT_EQ(encode<Rational>(Rational(1, 3), 0, 1, 6), prefix(expand(Rational(1, 3), 2), 6));
  EXPECT_TRUE(encode<Rational>(Rational(1, 3), 0, 1, 0).empty());
  EXPECT_THROW(encode<Rational>(Rational(2), 0, 1, 4), DomainError);
}

TEST(Encode, FinalIntervalContainsValueAndMatchesExpansion) {
  Gen gen(25);
  for (int i = 0; i < 200; ++i) {
    const Rational a = gen.rational();
    const Rational b = a + Rational(gen.integer(1, 9), gen.integer(1, 9));
    const Rational c = a + (b - a) * gen.unit_rational(64);
    const std::size_t depth = static_cast<std::size_t>(gen.integer(0, 70));
    const DigitString word = encode(c, a, b, depth);
    const auto chain = interval_chain(a, b, word);
    ASSERT_TRUE(chain.final_interval().contains(c));
    ASSERT_EQ(word, prefix(expand(affine_to_unit(c, a, b), 2), depth));
  }
}

TEST(Affine, Examples) {
  EXPECT_EQ(affine_to_unit<Rational>(4, 2, 6), Rational(1, 2));
  EXPECT_EQ(affine_from_unit<Rational>(Rational(1, 2), 2, 6), Rational(4));
  const Rational q(7, 13);
  EXPECT_EQ(affine_to_unit<Rational>(affine_from_unit<Rational>(q, -1, 5), -1, 5), q);
  EXPECT_THROW(affine_to_unit<Rational>(0, 1, 1), DomainError);
  EXPECT_THROW(affine_from_unit<Rational>(0, 2, 1), DomainError);
}

}  // namespace
}  // namespace dedekind
