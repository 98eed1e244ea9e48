#include <gtest/gtest.h>

#include "zetatop/error.hpp"
#include "zetatop/fixtures.hpp"
#include "zetatop/monodromy.hpp"
#include "zetatop/poly2.hpp"
#include "zetatop/resolve.hpp"
#include "zetatop/zeta.hpp"

using namespace zetatop;

namespace {

CurveInput single(const std::string& poly) {
  CurveInput c;
  c.branches.push_back({"f", Poly2::parse(poly), poly});
  return c;
}

std::string error_code(const CurveInput& c, ResolveOptions opt = {}) {
  try {
    resolve(c, opt);
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(Poly2, ParseAndCoefficients) {
  const Poly2 f = Poly2::parse("(x-2y^2)^2+y^5");
  EXPECT_EQ(f.coeff(2, 0), Rat(1));
  EXPECT_EQ(f.coeff(1, 2), Rat(-4));
  EXPECT_EQ(f.coeff(0, 4), Rat(4));
  EXPECT_EQ(f.coeff(0, 5), Rat(1));
  EXPECT_EQ(f.order(), 2);
  EXPECT_THROW(Poly2::parse("x+z"), ParseError);
}

TEST(Poly2, BlowupCharts) {
  const Poly2 cusp = Poly2::parse("y^2-x^3");
  EXPECT_EQ(cusp.chart_u(2), Poly2::parse("y^2-x"));
  EXPECT_EQ(cusp.chart_v(2), Poly2::parse("1-x^3*y"));
  EXPECT_EQ(Poly2::parse("y^2-x").shift_second(Rat(1)), Poly2::parse("y^2+2y+1-x"));
  EXPECT_EQ(cusp.restrict_first_zero(), Poly(std::vector<Rat>{0, 0, 1}));
}

TEST(Poly2, Squarefree) {
  EXPECT_TRUE(is_squarefree(Poly2::parse("y^2-x^3")));
  EXPECT_FALSE(is_squarefree(Poly2::parse("(y-x^2)^2*(x+y)")));
  EXPECT_FALSE(is_squarefree(Poly2::parse("x^2")));
}

TEST(Resolve, SmoothGermNeedsNoBlowup) {
  const Resolution r = resolve(single("y-x^2"));
  EXPECT_EQ(r.blowups, 0);
  EXPECT_EQ(r.milnor, 0);
  EXPECT_EQ(r.graph.exceptional_count(), 0u);
}

TEST(Resolve, CuspGraph) {
  const Resolution r = resolve(single("y^2-x^3"));
  EXPECT_EQ(r.blowups, 3);
  EXPECT_EQ(canonical_form(r.graph), canonical_form(FixtureCatalog::embedded().graph("cusp")));
}

// mu(y^b + x^a) = (a-1)(b-1) is the oracle for three independent routes.
TEST(Resolve, BrieskornMilnorNumbers) {
  for (auto [a, b] : {std::pair{2, 2}, {3, 2}, {5, 2}, {5, 3}, {7, 4}, {4, 2}, {6, 4}}) {
    const std::string poly = "y^" + std::to_string(b) + "+x^" + std::to_string(a);
    CurveInput c;
    if (a == 4 && b == 2) {
      // Same Milnor number as y^2 - x^4, which splits over Q.
      c = CurveInput{{{"f1", Poly2::parse("y-x^2"), ""}, {"f2", Poly2::parse("y+x^2"), ""}}, {}};
    } else if (a == 6 && b == 4) {
      // y^4 - x^6
      c = CurveInput{{{"f1", Poly2::parse("y^2-x^3"), ""}, {"f2", Poly2::parse("y^2+x^3"), ""}}, {}};
    } else {
      c = single(poly);
    }
    const Resolution r = resolve(c);
    const std::int64_t mu = (a - 1) * (b - 1);
    EXPECT_EQ(r.milnor, mu) << poly;
    EXPECT_EQ(milnor_from_resolution(r.graph), mu) << poly;
    EXPECT_EQ(char_poly(r.graph).degree(), mu) << poly;
  }
}

TEST(Resolve, StandardFormHasAtMostOneDoublePole) {
  for (const std::string poly : {"y^2-x^3", "y^3-x^5", "(y-x^2)^2-x^5", "y^3-x^7", "x*y*(x-y)"}) {
    const Resolution r = resolve(single(poly));
    const ZetaReport z = zeta_ordinary(r.graph);
    const auto doubles = z.poles_of_order(2);
    EXPECT_LE(doubles.size(), 1u) << poly;
    if (!doubles.empty()) EXPECT_EQ(doubles.front(), -z.lct) << poly;
  }
}

TEST(Resolve, AuxiliaryCurvesFeedTheTable) {
  CurveInput c = single("y^2-x^3");
  c.add_default_auxiliaries();
  ASSERT_EQ(c.auxiliaries.size(), 2u);
  c.add_default_auxiliaries();
  EXPECT_EQ(c.auxiliaries.size(), 2u);
  const Resolution r = resolve(c);
  const auto& x = r.table.curves.at("x");
  const auto& y = r.table.curves.at("y");
  std::vector<std::int64_t> mx;
  std::vector<std::int64_t> my;
  for (const auto& [_, m] : x.m) mx.push_back(m);
  for (const auto& [_, m] : y.m) my.push_back(m);
  std::sort(mx.begin(), mx.end());
  std::sort(my.begin(), my.end());
  EXPECT_EQ(mx, (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_EQ(my, (std::vector<std::int64_t>{1, 2, 3}));
}

TEST(Resolve, InputValidation) {
  EXPECT_EQ(error_code(single("x^2")), "non-reduced-branch");
  EXPECT_EQ(error_code(single("x+1")), "bad-curve");
  CurveInput two{{{"a", Poly2::parse("x-y"), ""}, {"b", Poly2::parse("2x-2y"), ""}}, {}};
  EXPECT_EQ(error_code(two), "curves-not-coprime");
  EXPECT_THROW(parse_curve_input("{\"branches\": 3}"), Error);
}

TEST(Resolve, IrrationalCentersAndBudget) {
  // Simple irrational tangents are carried as one attachment of degree 2.
  const Resolution r = resolve(single("y^2-2x^2"));
  EXPECT_EQ(r.blowups, 1);
  EXPECT_EQ(r.milnor, 1);
  EXPECT_EQ(error_code(single("(y^2-2x^2)^2+x^5")), "non-rational-center");
  ResolveOptions tight;
  tight.budget = 2;
  EXPECT_EQ(error_code(single("y^2-x^3"), tight), "budget-exceeded");
}

TEST(Resolve, StepwiseEngineReachesNormalCrossings) {
  BlowupEngine e(single("y^3-x^5"));
  EXPECT_FALSE(ncd_check(e.state()).empty());
  while (!e.done()) e.step();
  EXPECT_TRUE(ncd_check(e.state()).empty());
  EXPECT_EQ(e.result().milnor, 8);
}

TEST(Resolve, ShuffledOrderIsDeterministic) {
  const CurveInput c = FixtureCatalog::embedded().curves("fab_curves");
  const std::string ref = canonical_form(resolve(c).graph);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    ResolveOptions opt;
    opt.shuffle_seed = seed;
    EXPECT_EQ(canonical_form(resolve(c, opt).graph), ref) << seed;
  }
}

TEST(Resolve, CurveInputRoundTrip) {
  const CurveInput c = FixtureCatalog::embedded().curves("fab_curves");
  const CurveInput back = parse_curve_input(serialize_curve_input(c));
  ASSERT_EQ(back.branches.size(), c.branches.size());
  for (std::size_t i = 0; i < c.branches.size(); ++i) EXPECT_EQ(back.branches[i].poly, c.branches[i].poly);
}
