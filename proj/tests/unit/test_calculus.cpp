#include <gtest/gtest.h>

#include "zetatop/calculus.hpp"
#include "zetatop/error.hpp"
#include "zetatop/fixtures.hpp"

using namespace zetatop;

namespace {

const FixtureCatalog& cat() { return FixtureCatalog::embedded(); }

// Sum_j m_j E_j.E_i + (C.E_i), which vanishes for the total transform of C.
std::int64_t pullback_defect(const ResGraph& g, const std::map<std::string, std::int64_t>& self,
                             const std::map<std::string, std::int64_t>& m, const std::vector<Attachment>& att,
                             const std::string& i) {
  std::int64_t sum = self.at(i) * m.at(i);
  for (const auto& e : g.edges()) {
    if (e.a == i && self.count(e.b)) sum += m.at(e.b);
    if (e.b == i && self.count(e.a)) sum += m.at(e.a);
  }
  for (const auto& a : att) {
    if (a.vertex == i) sum += a.count;
  }
  return sum;
}

}  // namespace

TEST(Calculus, CuspSelfIntersections) {
  const auto self = self_intersections(cat().graph("cusp"));
  EXPECT_EQ(self.at("E1"), -3);
  EXPECT_EQ(self.at("E2"), -2);
  EXPECT_EQ(self.at("E3"), -1);
}

TEST(Calculus, CanonicalNuReproducesFixtures) {
  for (const std::string id : {"fab_fig1", "node", "cusp"}) {
    const ResGraph g = cat().graph(id);
    const auto nu = canonical_nu(g, self_intersections(g));
    for (const auto& v : g.vertices()) {
      if (!v.is_arrow()) EXPECT_EQ(nu.at(v.id), v.nu) << id << ' ' << v.id;
    }
  }
}

TEST(Calculus, CuspCurveMultiplicitiesByHand) {
  const ResGraph g = cat().graph("cusp");
  const auto mx = curve_multiplicities(g, {{"E1", 1}});
  EXPECT_EQ(mx, (std::map<std::string, std::int64_t>{{"E1", 1}, {"E2", 1}, {"E3", 2}}));
  const auto my = curve_multiplicities(g, {{"E2", 1}});
  EXPECT_EQ(my, (std::map<std::string, std::int64_t>{{"E1", 1}, {"E2", 2}, {"E3", 3}}));
}

TEST(Calculus, Figure1TableSatisfiesPullbackRelation) {
  const ResGraph g = cat().graph("fab_fig1");
  const MultTable t = complete_multtable(g, cat().multtable("fab_multtable"));
  const auto self = self_intersections(g);
  for (const auto& [curve, cm] : t.curves) {
    for (const auto& [vid, _] : self) {
      EXPECT_EQ(pullback_defect(g, self, cm.m, cm.attachment, vid), 0) << curve << " at " << vid;
    }
  }
}

TEST(Calculus, DecorateCuspWithX) {
  const ResGraph g = cat().graph("cusp");
  const MultTable t = complete_multtable(g, cat().multtable("cusp_multtable"));
  const ResGraph d = decorate(g, t, FormSpec{{{"x", 1}}});
  EXPECT_EQ(d.vertex("E1").nu, 3);
  EXPECT_EQ(d.vertex("E2").nu, 4);
  EXPECT_EQ(d.vertex("E3").nu, 7);
  std::size_t forms = 0;
  for (const auto& v : d.vertices()) {
    if (v.kind != VertexKind::form_arrow) continue;
    ++forms;
    EXPECT_EQ(v.N, 0);
    EXPECT_EQ(v.nu, 2);
    EXPECT_EQ(d.neighbors(v.id), std::vector<std::string>{"E1"});
  }
  EXPECT_EQ(forms, 1u);
}

TEST(Calculus, StandardFormIsIdentity) {
  const ResGraph g = cat().graph("fab_fig1");
  const MultTable t = complete_multtable(g, cat().multtable("fab_multtable"));
  EXPECT_TRUE(FormSpec{}.is_standard());
  EXPECT_EQ(canonical_form(decorate(g, t, FormSpec{})), canonical_form(g));
}

TEST(Calculus, AdmissibilityRules) {
  const ResGraph g = cat().graph("cusp");
  MultTable t = complete_multtable(g, cat().multtable("cusp_multtable"));
  EXPECT_FALSE(admissibility_violations(g, t, FormSpec{{{"z", 1}}}).empty());
  EXPECT_THROW(decorate(g, t, FormSpec{{{"z", 1}}}), ValidationError);
  EXPECT_FALSE(admissibility_violations(g, t, FormSpec{{{"x", -1}}}).empty());

  // A second transversal curve at E1 makes it a branching component.
  t.curves["z"] = CurveMultiplicities{curve_multiplicities(g, {{"E1", 1}}), {{"E1", 1}}};
  EXPECT_TRUE(admissibility_violations(g, t, FormSpec{{{"z", 1}}}).empty());
  EXPECT_FALSE(admissibility_violations(g, t, FormSpec{{{"x", 1}, {"z", 1}}}).empty());
}

TEST(Calculus, MulttableRoundTrip) {
  const ResGraph g = cat().graph("fab_fig1");
  const MultTable t = complete_multtable(g, cat().multtable("fab_multtable"));
  EXPECT_EQ(parse_multtable(serialize_multtable(t)), t);
  const FormSpec w = cat().form("omega2");
  EXPECT_EQ(parse_formspec(serialize_formspec(w)), w);
}
