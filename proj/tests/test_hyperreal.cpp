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

#include <gtest/gtest.h>

#include "dedekind/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace dedekind {
namespace {

using testing::Gen;

const Hyperreal e = Hyperreal::epsilon();

Hyperreal H(std::string_view text) { return parse_hyperreal(text); }

Poly P(std::initializer_list<std::pair<const Poly::Exponent, Rational>> terms) {
  return Poly(Poly::Terms(terms));
}

TEST(Poly, DivmodAndGcd) {
  const Poly x = P({{1, 1}});
  const Poly a = P({{0, -1}, {2, 1}});  // e^2 - 1
  const Poly b = P({{0, 1}, {1, 1}});   // 1 + e
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, P({{0, -1}, {1, 1}}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a * x, b * x * x), b * x);
  EXPECT_EQ(gcd(Poly(), Poly()), Poly());
  EXPECT_THROW(divmod(a, Poly()), ArithmeticError);
}

TEST(Poly, ToString) {
  EXPECT_EQ(P({{0, 1}, {1, 2}}).to_string(), "1 + 2*e");
  EXPECT_EQ(P({{1, -1}, {3, Rational(1, 2)}}).to_string(), "-e + 1/2*e^3");
  EXPECT_EQ(Poly().to_string(), "0");
}

TEST(Parse, Examples) {
  const Hyperreal x = H("(1+2*e)/(e^2)");
  EXPECT_EQ(x.numerator(), P({{0, 1}, {1, 2}}));
  EXPECT_EQ(x.denominator(), P({{2, 1}}));
  EXPECT_EQ(x.to_string(), "(1 + 2*e) / (e^2)");

  EXPECT_EQ(H("e/e"), Hyperreal(1));
  EXPECT_EQ(H("e/e").to_string(), "1");

  // 1/(1+e) + 1/(1-e) = ((1-e) + (1+e)) / ((1+e)(1-e)) = 2 / (1 - e^2).
  const Hyperreal sum = H("1/(1+e) + 1/(1-e)");
  EXPECT_EQ(sum.numerator(), P({{0, 2}}));
  EXPECT_EQ(sum.denominator(), P({{0, 1}, {2, -1}}));
  EXPECT_EQ(sum.to_string(), "(2) / (1 - e^2)");
}

TEST(Parse, GrammarDetails) {
  EXPECT_EQ(H("-e^2"), -(e * e));
  EXPECT_EQ(H("--e"), e);
  EXPECT_EQ(H(" 2 / 3 "), Hyperreal(Rational(2, 3)));
  EXPECT_EQ(H("e^-2"), (e * e).reciprocal());
  EXPECT_EQ(H("(1/2)^3"), Hyperreal(Rational(1, 8)));
  EXPECT_EQ(H("1 - e - e"), Hyperreal(1) - e - e);
  // Literal rationals bind before division: e/2/3 reads as e / (2/3).
  EXPECT_EQ(H("e/2/3"), e * Hyperreal(Rational(3, 2)));
  EXPECT_EQ(H("e/(2)/3"), e / Hyperreal(6));
}

TEST(Parse, Errors) {
  try {
    H("1 + * e");
    FAIL() << "expected a parse error";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.position(), 4U);
  }
  EXPECT_THROW(H(""), ParseError);
  EXPECT_THROW(H("(1 + e"), ParseError);
  EXPECT_THROW(H("1/0"), ParseError);
  EXPECT_THROW(H("x"), ParseError);
  EXPECT_THROW(H("ee"), ParseError);
  EXPECT_THROW(H("std(e)"), ParseError);
  EXPECT_THROW(H("1/(e-e)"), ArithmeticError);
  EXPECT_THROW(H("0^-1"), ArithmeticError);
}

TEST(Parse, CanonicalTextRoundTrips) {
  Gen gen(31);
  for (int i = 0; i < 300; ++i) {
    const Hyperreal x = gen.hyperreal();
    ASSERT_EQ(H(x.to_string()), x) << x;
  }
}

TEST(Evaluate, StandardPartCall) {
  EXPECT_EQ(evaluate_expression("std((2+e)/(1+e))"), Hyperreal(2));
  EXPECT_EQ(evaluate_expression("std(3 + 5*e) + e"), Hyperreal(3) + e);
  EXPECT_THROW(evaluate_expression("std(1/e)"), ArithmeticError);
  EXPECT_THROW(evaluate_expression("stdx(1)"), ParseError);
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(arithmetic(ArithmeticKind::kAdd, H("1+e"), H("2-e")), Hyperreal(3));
  EXPECT_EQ(arithmetic(ArithmeticKind::kMul, e, H("1/e")), Hyperreal(1));
  const Hyperreal inv = arithmetic(ArithmeticKind::kDiv, 1, H("1+e"));
  EXPECT_EQ(inv.to_string(), "(1) / (1 + e)");
  EXPECT_EQ(arithmetic(ArithmeticKind::kMul, H("1+e"), inv), Hyperreal(1));
  EXPECT_EQ(arithmetic(ArithmeticKind::kSub, e, e), Hyperreal(0));
  EXPECT_THROW(arithmetic(ArithmeticKind::kDiv, 1, Hyperreal(0)), ArithmeticError);
}

TEST(Arithmetic, NormalFormIsUnique) {
  // The same element reached along different routes has one representation.
  EXPECT_EQ(H("(2 + 2*e) / (4 + 4*e^2)"), H("(1 + e) / (2 + 2*e^2)"));
  EXPECT_EQ(H("(e - e^2) / (3*e)").denominator(), P({{0, 1}}));
  EXPECT_EQ(H("(1) / (-2 + e)").denominator().low_coefficient(), Rational(1));
}

TEST(Compare, Examples) {
  for (long m = 1; m <= 20; ++m) {
    const Rational t = Rational(1, 2).pow(m);
    EXPECT_LT(t * t, t);
  }
  EXPECT_EQ(compare(e * e, e), Comparison::kLess);

  EXPECT_EQ(testing::small_t_sign(H("1/e"), Hyperreal(1000000)), 1);
  EXPECT_EQ(compare(H("1/e"), Hyperreal(1000000)), Comparison::kGreater);

  EXPECT_EQ(compare(Hyperreal(3), H("3+e")), Comparison::kLess);
  EXPECT_EQ(compare(H("e/e"), Hyperreal(1)), Comparison::kEqual);
}

TEST(Compare, AgreesWithSmallTOracle) {
  Gen gen(32);
  for (int i = 0; i < 300; ++i) {
    const Hyperreal x = gen.hyperreal();
    const Hyperreal y = gen.hyperreal();
    const auto oracle = testing::small_t_sign(x, y);
    ASSERT_TRUE(oracle.has_value());
    const int got = compare(x, y) == Comparison::kLess ? -1 : (compare(x, y) == Comparison::kEqual ? 0 : 1);
    ASSERT_EQ(got, *oracle) << x << " vs " << y;
  }
}

TEST(Classify, Examples) {
  const Hyperreal a = H("e^2 + 2*e^3");
  EXPECT_EQ(classify(a), Magnitude::kInfinitesimal);
  EXPECT_EQ(a.valuation(), 2);
  const Hyperreal b = H("(1+e)/e");
  EXPECT_EQ(classify(b), Magnitude::kUnbounded);
  EXPECT_EQ(b.valuation(), -1);
  EXPECT_EQ(classify(Hyperreal(0)), Magnitude::kZero);
  EXPECT_FALSE(Hyperreal(0).valuation().has_value());
  EXPECT_EQ(classify(H("7/3 + e")), Magnitude::kAppreciable);
}

TEST(Classify, InfinitesimalIffReciprocalUnbounded) {
  Gen gen(33);
  for (int i = 0; i < 300; ++i) {
    const Hyperreal x = gen.nonzero_hyperreal();
    ASSERT_EQ(classify(x) == Magnitude::kInfinitesimal,
              classify(x.reciprocal()) == Magnitude::kUnbounded);
  }
}

TEST(StandardPart, Examples) {
  EXPECT_EQ(standard_part(H("3 + 5*e + e^2")), Rational(3));
  const Hyperreal x = H("(2+e)/(1+e)");
  EXPECT_EQ(classify(x - Hyperreal(2)), Magnitude::kInfinitesimal);
  EXPECT_EQ(standard_part(x), Rational(2));
  EXPECT_THROW(standard_part(H("1/e")), ArithmeticError);
  EXPECT_EQ(standard_part(H("e/(1+e)")), Rational(0));
}

TEST(StandardPart, UniqueUnderPerturbation) {
  Gen gen(34);
  for (int i = 0; i < 200; ++i) {
    const Hyperreal x = gen.finite_hyperreal();
    const Rational s = standard_part(x);
    ASSERT_TRUE(closeness(Closeness::kInfinitesimallyClose, x, Hyperreal(s)));
    const Magnitude rest = classify(x - Hyperreal(s));
    ASSERT_TRUE(rest == Magnitude::kZero || rest == Magnitude::kInfinitesimal);
    for (long k : {1L, 7L, 1000L}) {
      ASSERT_FALSE(closeness(Closeness::kInfinitesimallyClose, x, Hyperreal(s + Rational(1, k))));
      ASSERT_FALSE(closeness(Closeness::kInfinitesimallyClose, x, Hyperreal(s - Rational(1, k))));
    }
  }
}

TEST(Closeness, Examples) {
  EXPECT_TRUE(closeness(Closeness::kInfinitesimallyClose, Hyperreal(Rational(1, 3)),
                        H("1/3 + e^2")));
  EXPECT_FALSE(closeness(Closeness::kInfinitesimallyClose, 0, Hyperreal(Rational(1, 1000))));
  EXPECT_TRUE(closeness(Closeness::kFinitelyDistant, H("1/e"), H("1/e + 7 + e")));
  EXPECT_FALSE(closeness(Closeness::kFinitelyDistant, H("1/e"), H("2/e")));
}

TEST(Archimedean, Examples) {
  const auto r1 = archimedean_check(e, 1, 1000000);
  EXPECT_FALSE(r1.exceeded_at.has_value());
  EXPECT_EQ(r1.verdict, ArchimedeanVerdict::kBoundedForever);

  const auto r2 = archimedean_check(1, 1000, 2000);
  EXPECT_EQ(r2.exceeded_at, 1001U);
  EXPECT_EQ(r2.verdict, ArchimedeanVerdict::kEventuallyExceeds);

  for (long m = 1; m <= 30; ++m) {
    const Rational t = Rational(1, 2).pow(m + 20);
    EXPECT_LT(Rational(1000000) * t * t, t);
  }
  const auto r3 = archimedean_check(e * e, e, 1000000);
  EXPECT_FALSE(r3.exceeded_at.has_value());
  EXPECT_EQ(r3.verdict, ArchimedeanVerdict::kBoundedForever);

  EXPECT_THROW(archimedean_check(e, 1, 0), DomainError);
}

TEST(Archimedean, ScanAgreesWithDirectComparison) {
  Gen gen(35);
  for (int i = 0; i < 60; ++i) {
    const Hyperreal a = gen.hyperreal();
    const Hyperreal b = gen.hyperreal();
    const auto r = archimedean_check(a, b, 40);
    std::optional<std::uint64_t> first;
    Hyperreal multiple;
    for (std::uint64_t n = 1; n <= 40 && !first; ++n) {
      multiple += a;
      if (multiple > b) first = n;
    }
    ASSERT_EQ(r.exceeded_at, first) << a << " , " << b;
    if (r.exceeded_at) ASSERT_EQ(r.verdict, ArchimedeanVerdict::kEventuallyExceeds);
  }
}

}  // namespace
}  // namespace dedekind
