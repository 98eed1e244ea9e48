#include <gtest/gtest.h>

#include "zetatop/error.hpp"
#include "zetatop/family.hpp"
#include "zetatop/fixtures.hpp"
#include "zetatop/zeta.hpp"

using namespace zetatop;

namespace {

// (q-p)/((q+p)(a+ps)^2) + 2/((q+p)(a+ps)) (p/a - s/(1+s)) at a point.
Rat derived_at(const GpqParams& g, const Rat& s) {
  const Rat p(g.p), q(g.q), a(g.a);
  const Rat l = a + p * s;
  return (q - p) / ((q + p) * l * l) + Rat(2) / ((q + p) * l) * (p / a - s / (Rat(1) + s));
}

const std::vector<GpqParams> kGrid = {{2, 3, 1}, {2, 3, 2}, {2, 3, 3}, {2, 5, 1}, {2, 5, 3},
                                      {3, 4, 1}, {3, 4, 2}, {3, 5, 4}, {4, 7, 3}};

}  // namespace

TEST(Family, QGraphShape) {
  const ResGraph g = build_gpq_qgraph({2, 3, 1});
  EXPECT_EQ(g.exceptional_count(), 2u);
  EXPECT_FALSE(g.is_ordinary());
  EXPECT_EQ(g.vertex("E1").N, 10);
  EXPECT_EQ(g.vertex("E1").nu, 5);
}

TEST(Family, TemplateMatchesBuilder) {
  for (const auto& p : kGrid) {
    EXPECT_EQ(canonical_form(FixtureCatalog::embedded().gpq_graph(p)), canonical_form(build_gpq_qgraph(p)))
        << p.str();
  }
}

TEST(Family, DerivedFormMatchesPointwiseOracle) {
  for (const auto& p : kGrid) {
    const RatFunc z = zeta_q(build_gpq_qgraph(p)).value;
    EXPECT_EQ(z, gpq_derived_closed_form(p)) << p.str();
    for (const Rat s : {Rat(0), Rat(2), Rat(1, 3), Rat(-7, 5)}) EXPECT_EQ(z.evaluate(s), derived_at(p, s)) << p.str();
  }
}

TEST(Family, FullResolutionAgrees) {
  for (const GpqParams p : {GpqParams{2, 3, 1}, GpqParams{2, 3, 3}, GpqParams{3, 4, 2}}) {
    EXPECT_EQ(gpq_full_resolution(p).value, zeta_q(build_gpq_qgraph(p)).value) << p.str();
  }
}

TEST(Family, ReferenceValues) {
  EXPECT_EQ(gpq_derived_closed_form({2, 3, 1}).evaluate(Rat(0)), Rat(1));
  EXPECT_EQ(gpq_derived_closed_form({2, 3, 1}).evaluate(Rat(1)), Rat(2, 9));
  EXPECT_EQ(gpq_derived_closed_form({2, 3, 3}).evaluate(Rat(0)), Rat(1, 9));
  EXPECT_EQ(gpq_printed_closed_form({2, 3, 3}).evaluate(Rat(0)), Rat(37, 45));
}

TEST(Family, PrintedFormAgreesOnlyAtAEqualsOne) {
  for (const auto& p : kGrid) {
    if (p.a == p.p) {
      EXPECT_THROW(gpq_printed_closed_form(p), ComputationError) << p.str();
      continue;
    }
    const bool equal = gpq_printed_closed_form(p) == gpq_derived_closed_form(p);
    EXPECT_EQ(equal, p.a == 1) << p.str();
  }
}

TEST(Family, DoublePoleAtMinusAOverP) {
  for (const auto& p : kGrid) {
    const auto z = zeta_q(build_gpq_qgraph(p)).value;
    const Rat s0(-p.a, p.p);
    if (p.a % p.p != 0) EXPECT_EQ(z.pole_order(s0), 2) << p.str();
  }
}

TEST(Family, ParameterValidation) {
  EXPECT_THROW(require_valid(GpqParams{3, 2, 1}), ValidationError);
  EXPECT_THROW(require_valid(GpqParams{2, 4, 1}), ValidationError);
  EXPECT_THROW(require_valid(GpqParams{2, 3, 0}), ValidationError);
  EXPECT_NO_THROW(require_valid(GpqParams{2, 3, 1}));
}
