#include <gtest/gtest.h>

#include "oracle.hpp"
#include "zetatop/error.hpp"
#include "zetatop/family.hpp"
#include "zetatop/fixtures.hpp"
#include "zetatop/zeta.hpp"

using namespace zetatop;

namespace {

const FixtureCatalog& cat() { return FixtureCatalog::embedded(); }

const std::vector<Rat> kSamples = {Rat(0), Rat(1), Rat(3, 7), Rat(-5, 11), Rat(13, 2)};

}  // namespace

TEST(Zeta, CuspClosedForm) {
  // y^2 = x^3: (5 + 4s) / ((1 + s)(5 + 6s)), value 1 at s = 0
  const auto r = zeta_ordinary(cat().graph("cusp"));
  EXPECT_EQ(r.value, RatFunc::parse("(5+4s)/((1+s)(5+6s))"));
  EXPECT_EQ(r.lct, Rat(5, 6));
  EXPECT_TRUE(r.poles_of_order(2).empty());
}

TEST(Zeta, NodeIsDoubleAtMinusOne) {
  const auto r = zeta_ordinary(cat().graph("node"));
  EXPECT_EQ(r.value, RatFunc::inverse_linear(1, 1, 2));
  ASSERT_EQ(r.poles.size(), 1u);
  EXPECT_EQ(r.poles[0].order, 2);
}

TEST(Zeta, AgreesWithPointwiseOracle) {
  for (const std::string id : {"fab_fig1", "fab_fig2", "fab_fig3", "fab_fig4", "node", "cusp"}) {
    const ResGraph g = cat().graph(id);
    const RatFunc z = zeta_ordinary(g).value;
    for (const auto& s : kSamples) EXPECT_EQ(z.evaluate(s), oracle::stratum_sum_at(g, s)) << id << " at " << s;
  }
}

TEST(Zeta, QEngineAgreesWithPointwiseOracle) {
  for (std::int64_t a : {1, 2, 3}) {
    const ResGraph g = build_gpq_qgraph({3, 4, a});
    const RatFunc z = zeta_q(g).value;
    for (const auto& s : kSamples) EXPECT_EQ(z.evaluate(s), oracle::stratum_sum_at(g, s)) << "a=" << a;
  }
}

TEST(Zeta, Figure1Poles) {
  const auto r = zeta_ordinary(cat().graph("fab_fig1"));
  ASSERT_EQ(r.poles.size(), 4u);
  EXPECT_EQ(r.poles.front().location, Rat(-1));
  EXPECT_EQ(r.poles.back().location, Rat(-1, 6));
  EXPECT_EQ(r.poles.back().order, 2);
  EXPECT_EQ(r.poles_of_order(2), std::vector<Rat>{Rat(-1, 6)});
  EXPECT_EQ(r.lct, Rat(1, 6));
}

TEST(Zeta, FastPolesMatchExactPoles) {
  for (const std::string id : {"fab_fig1", "fab_fig2", "fab_fig3", "fab_fig4", "node", "cusp"}) {
    const ResGraph g = cat().graph(id);
    const auto exact = zeta_ordinary(g).poles;
    const auto fast = fast_poles(g);
    ASSERT_EQ(exact.size(), fast.size()) << id;
    for (std::size_t i = 0; i < fast.size(); ++i) {
      EXPECT_EQ(exact[i].location, fast[i].location) << id;
      EXPECT_EQ(exact[i].order, fast[i].order) << id;
    }
  }
}

TEST(Zeta, DoublePoleCandidatesUseGcd) {
  const auto cands = double_pole_candidates(cat().graph("fab_fig1"));
  ASSERT_FALSE(cands.empty());
  for (const auto& c : cands) {
    EXPECT_EQ(c.gcd, gcd64(c.N_a, c.N_b));
    for (auto d : c.admissible_denominators) EXPECT_EQ(c.gcd % d, 0);
  }
}

TEST(Zeta, OrdinaryEngineRejectsQGraphs) {
  EXPECT_THROW(zeta_ordinary(build_gpq_qgraph({2, 3, 1})), ValidationError);
}

TEST(Zeta, JsonAndTextShareContent) {
  const auto r = zeta_ordinary(cat().graph("fab_fig3"));
  const std::string text = render_text(r);
  const std::string json = render_json(r);
  for (const std::string pole : {"-3/2", "-5/3"}) {
    EXPECT_NE(text.find(pole), std::string::npos);
    EXPECT_NE(json.find(pole), std::string::npos);
  }
}
