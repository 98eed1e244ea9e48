#include <gtest/gtest.h>

#include "zetatop/error.hpp"
#include "zetatop/exact/linsolve.hpp"
#include "zetatop/exact/poly.hpp"
#include "zetatop/exact/rat.hpp"
#include "zetatop/exact/ratfunc.hpp"

using namespace zetatop;

TEST(Rat, LowestTermsAndSign) {
  EXPECT_EQ(Rat(6, -4), Rat(-3, 2));
  EXPECT_EQ(Rat(6, -4).den(), 2);
  EXPECT_EQ(Rat::parse("-10/57").str(), "-10/57");
  EXPECT_EQ(Rat::parse(" 14/4 "), Rat(7, 2));
  EXPECT_THROW(Rat(1, 0), Error);
  EXPECT_THROW(Rat::parse("1/"), Error);
  EXPECT_THROW(Rat::parse("abc"), Error);
}

TEST(Rat, Arithmetic) {
  EXPECT_EQ(Rat(1, 2) + Rat(1, 3), Rat(5, 6));
  EXPECT_EQ(Rat(1, 2) * Rat(2, 3) - Rat(1, 3), Rat(0));
  EXPECT_EQ(pow(Rat(-2, 3), 3), Rat(-8, 27));
  EXPECT_EQ(pow(Rat(2, 3), -2), Rat(9, 4));
  EXPECT_LT(Rat(-7, 38), Rat(-10, 57));
  EXPECT_THROW(Rat(1) / Rat(0), Error);
}

TEST(Rat, ExceedsMachineWords) {
  Rat big = pow(Rat(3), 80);
  EXPECT_EQ((big + Rat(1)) - big, Rat(1));
  EXPECT_THROW(big.to_int64(), Error);
}

TEST(Poly, DivisionAndGcd) {
  const Poly a = Poly::linear(1, 1) * Poly::linear(1, 6) * Poly::linear(1, 6);
  const Poly b = Poly::linear(1, 6) * Poly::linear(7, 38);
  EXPECT_EQ(gcd(a, b), Poly::linear(1, 6).monic());
  const auto [q, r] = a.divmod(b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(vanishing_order(a, Rat(-1, 6)), 2);
  EXPECT_EQ(vanishing_order(a, Rat(1)), 0);
  EXPECT_FALSE(is_squarefree(a));
  EXPECT_TRUE(is_squarefree(squarefree_part(a)));
}

TEST(Poly, RationalRoots) {
  // (2s - 3)^2 (s + 5) (s^2 + 1)
  const Poly p = Poly::linear(-3, 2).pow(2) * Poly::linear(5, 1) * Poly(std::vector<Rat>{1, 0, 1});
  const auto rr = rational_roots(p);
  ASSERT_EQ(rr.roots.size(), 2u);
  EXPECT_EQ(rr.roots[0], std::make_pair(Rat(-5), 1));
  EXPECT_EQ(rr.roots[1], std::make_pair(Rat(3, 2), 2));
  EXPECT_EQ(rr.cofactor.degree(), 2);
}

TEST(Poly, Rendering) {
  EXPECT_EQ(Poly(std::vector<Rat>{70, 1051, 0, -3}).str(), "70 + 1051*s - 3*s^3");
  EXPECT_EQ(Poly().str(), "0");
}

TEST(RatFunc, CanonicalCancellation) {
  // (1+s)/((1+s)(2+3s)) reduces to 1/(2+3s)
  const RatFunc f = RatFunc::from_poly(Poly::linear(1, 1)) * RatFunc::inverse_linear(1, 1) *
                    RatFunc::inverse_linear(2, 3);
  EXPECT_EQ(f, RatFunc::inverse_linear(2, 3));
  EXPECT_EQ(f.pole_order(Rat(-1)), 0);
  EXPECT_EQ(f.pole_order(Rat(-2, 3)), 1);
}

TEST(RatFunc, NonPrimitiveFactorsNormalize) {
  // 1/(2+2s) = 1/2 * 1/(1+s)
  EXPECT_EQ(RatFunc::inverse_linear(2, 2), RatFunc(Rat(1, 2)) * RatFunc::inverse_linear(1, 1));
  EXPECT_EQ(RatFunc::inverse_linear(0, 3).pole_order(Rat(0)), 1);
}

TEST(RatFunc, ParseRoundTrip) {
  const std::string text = "(70+1051s+5138s^2+7864s^3-1368s^4)/((57s+10)(38s+7)(6s+1)^2(s+1))";
  const RatFunc f = RatFunc::parse(text);
  EXPECT_EQ(RatFunc::parse(f.str()), f);
  EXPECT_EQ(f.denominator_degree(), 5);
  EXPECT_EQ(f.pole_order(Rat(-1, 6)), 2);
  // Independent pointwise evaluation of the input expression.
  for (const Rat s : {Rat(0), Rat(1), Rat(2, 7), Rat(-3)}) {
    const Rat num = Rat(70) + Rat(1051) * s + Rat(5138) * pow(s, 2) + Rat(7864) * pow(s, 3) - Rat(1368) * pow(s, 4);
    const Rat den = (Rat(57) * s + 10) * (Rat(38) * s + 7) * pow(Rat(6) * s + 1, 2) * (s + 1);
    EXPECT_EQ(f.evaluate(s), num / den);
  }
}

TEST(RatFunc, SumsAgreeWithPointwiseSums) {
  const RatFunc a = RatFunc::parse("3/(2+5s) - 1/(1+s)^2");
  const RatFunc b = RatFunc::parse("(1+s)/((2+5s)(3+s))");
  for (const Rat s : {Rat(0), Rat(1, 3), Rat(5)}) {
    EXPECT_EQ((a + b).evaluate(s), a.evaluate(s) + b.evaluate(s));
    EXPECT_EQ((a * b).evaluate(s), a.evaluate(s) * b.evaluate(s));
  }
  EXPECT_TRUE((a - a).is_zero());
}

TEST(RatFunc, RejectsNonLinearDenominators) {
  EXPECT_THROW(RatFunc::parse("1/(1+s^2)"), Error);
  EXPECT_THROW(RatFunc::parse("1/(1+"), ParseError);
}

TEST(LinSolve, SolvesAndDetectsSingular) {
  const auto x = solve_linear({{2, 1}, {1, 3}}, {3, 5});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rat(4, 5));
  EXPECT_EQ((*x)[1], Rat(7, 5));
  EXPECT_FALSE(solve_linear({{1, 2}, {2, 4}}, {1, 2}));
}
