#include <gtest/gtest.h>

#include "zetatop/error.hpp"
#include "zetatop/explore.hpp"
#include "zetatop/fixtures.hpp"

using namespace zetatop;

namespace {

struct Fig1 {
  ResGraph g = FixtureCatalog::embedded().graph("fab_fig1");
  MultTable t = complete_multtable(g, FixtureCatalog::embedded().multtable("fab_multtable"));
};

const Fig1& fig1() {
  static const Fig1 f;
  return f;
}

constexpr const char* kSmallBox = "x:0..2,y:0..2,x-y^2:0..1,y-x^2:0..2";

}  // namespace

TEST(Explore, ParseBounds) {
  const auto& t = fig1().t;
  const SearchBox box = parse_bounds(kSmallBox, t);
  EXPECT_EQ(box.size(), 3u * 3u * 2u * 3u);
  EXPECT_EQ(box.bounds.at("x-y^2"), (ExponentRange{0, 1}));
  const SearchBox def = parse_bounds("default", t);
  EXPECT_EQ(def.size(), 823543u);
  EXPECT_EQ(parse_bounds("none", t).size(), 1u);
  EXPECT_THROW(parse_bounds("z:3", t), ValidationError);
  EXPECT_THROW(parse_bounds("x:3..1", t), ValidationError);
  EXPECT_EQ(parse_targets("-2/3, -3/2"), (std::set<Rat>{Rat(-2, 3), Rat(-3, 2)}));
}

TEST(Explore, FormEnumerationCoversTheBox) {
  const SearchBox box = parse_bounds(kSmallBox, fig1().t);
  std::set<std::map<std::string, std::int64_t>> seen;
  for (std::uint64_t i = 0; i < box.size(); ++i) {
    FormSpec w = box.form_at(i);
    std::erase_if(w.exponents, [](const auto& kv) { return kv.second == 0; });
    seen.insert(w.exponents);
  }
  EXPECT_EQ(seen.size(), box.size());
}

// Brute force through decorate + zeta_ordinary is the oracle for the sweep.
TEST(Explore, SweepMatchesBruteForce) {
  const auto& [g, t] = fig1();
  const SearchBox box = parse_bounds(kSmallBox, t);
  std::map<std::vector<Rat>, std::uint64_t> expected;
  std::uint64_t inadmissible = 0;
  for (std::uint64_t i = 0; i < box.size(); ++i) {
    const FormSpec w = box.form_at(i);
    if (!admissibility_violations(g, t, w).empty()) {
      ++inadmissible;
      continue;
    }
    ++expected[zeta_ordinary(decorate(g, t, w)).poles_of_order(2)];
  }
  SweepOptions opt;
  opt.max_hits = 5;
  const SearchResult r = sweep(g, t, box, opt);
  EXPECT_EQ(r.forms, box.size());
  EXPECT_EQ(r.inadmissible, inadmissible);
  std::map<std::vector<Rat>, std::uint64_t> got;
  for (const auto& c : r.classes) got[c.poles] = c.count;
  EXPECT_EQ(got, expected);
  EXPECT_LE(r.hits.size(), 5u);
}

TEST(Explore, ThreadedSweepIsDeterministic) {
  const auto& [g, t] = fig1();
  const SearchBox box = parse_bounds(kSmallBox, t);
  SweepOptions one;
  SweepOptions four;
  four.jobs = 4;
  const auto a = sweep(g, t, box, one);
  const auto b = sweep(g, t, box, four);
  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    EXPECT_EQ(a.classes[i].poles, b.classes[i].poles);
    EXPECT_EQ(a.classes[i].count, b.classes[i].count);
    EXPECT_EQ(a.classes[i].first_index, b.classes[i].first_index);
  }
  ASSERT_EQ(a.hits.size(), b.hits.size());
  for (std::size_t i = 0; i < a.hits.size(); ++i) EXPECT_EQ(a.hits[i].index, b.hits[i].index);
}

TEST(Explore, TargetFiltersHits) {
  const auto& [g, t] = fig1();
  SearchBox box = parse_bounds("x:0..4", t);
  box.target = parse_targets("-1/2,-1/3");
  const auto r = sweep(g, t, box);
  ASSERT_GE(r.target_matches, 1u);
  for (const auto& h : r.hits) {
    const auto d = h.report.poles_of_order(2);
    EXPECT_NE(std::find(d.begin(), d.end(), Rat(-1, 2)), d.end());
    EXPECT_NE(std::find(d.begin(), d.end(), Rat(-1, 3)), d.end());
  }
}

TEST(Explore, BoxCapIsEnforced) {
  const auto& [g, t] = fig1();
  SweepOptions opt;
  opt.max_forms = 10;
  EXPECT_THROW(sweep(g, t, parse_bounds(kSmallBox, t), opt), ValidationError);
}

TEST(Explore, GcdCertificates) {
  const auto certs = gcd_certificates(fig1().g);
  ASSERT_FALSE(certs.empty());
  std::size_t a_side = 0;
  for (const auto& c : certs) {
    EXPECT_EQ(c.gcd, gcd64(c.N_a, c.N_b));
    if (c.side == "A1") {
      ++a_side;
      EXPECT_TRUE(c.excludes(3)) << c.str();
    }
  }
  EXPECT_GT(a_side, 0u);
}

TEST(Explore, RemarkOnSmallBox) {
  const auto& [g, t] = fig1();
  const auto r = verify_remark(g, t, parse_bounds(kSmallBox, t));
  EXPECT_TRUE(r.no_pair);
  EXPECT_EQ(r.both_targets, 0u);
  EXPECT_TRUE(r.root_isolated);
  EXPECT_TRUE(r.certificate_holds);
  EXPECT_NE(std::find(r.sides_excluding_3.begin(), r.sides_excluding_3.end(), "A1"), r.sides_excluding_3.end());
}

TEST(Explore, CoverageReportsEigenvalueOrders) {
  const auto& [g, t] = fig1();
  const auto c = eigenvalue_coverage(g, t, parse_bounds("x:0..3,y:0..3", t));
  EXPECT_EQ(c.eigen_orders.count(1), 1u);
  EXPECT_EQ(c.eigen_orders.at(38), 3);
  EXPECT_TRUE(c.covered.count(6));
  for (auto d : c.covered) EXPECT_TRUE(c.eigen_orders.count(d));
}
