#include <gtest/gtest.h>

#include <map>

#include "zetatop/error.hpp"
#include "zetatop/fixtures.hpp"
#include "zetatop/monodromy.hpp"
#include "zetatop/zeta.hpp"

using namespace zetatop;

namespace {

const FixtureCatalog& cat() { return FixtureCatalog::embedded(); }

Poly t_pow_minus_one(std::int64_t m) {
  std::vector<Rat> c(static_cast<std::size_t>(m) + 1);
  c.front() = Rat(-1);
  c.back() = Rat(1);
  return Poly(c);
}

// Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e
Poly cyclotomic(std::int64_t d) {
  static std::map<std::int64_t, Poly> memo;
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  Poly p = t_pow_minus_one(d);
  for (std::int64_t e = 1; e < d; ++e) {
    if (d % e == 0) p = p.divmod(cyclotomic(e)).first;
  }
  return memo[d] = p;
}

std::int64_t divides_times(Poly p, const Poly& q) {
  std::int64_t k = 0;
  for (;;) {
    auto [quo, rem] = p.divmod(q);
    if (!rem.is_zero()) return k;
    p = quo;
    ++k;
  }
}

}  // namespace

TEST(Monodromy, ClassicalExamples) {
  EXPECT_EQ(char_poly(cat().graph("node")).expand(), Poly(std::vector<Rat>{-1, 1}));
  EXPECT_EQ(char_poly(cat().graph("cusp")).expand(), Poly(std::vector<Rat>{1, -1, 1}));
  EXPECT_EQ(milnor(cat().graph("cusp")), 2);
}

TEST(Monodromy, Figure1Factors) {
  const CycProduct d = char_poly(cat().graph("fab_fig1"));
  EXPECT_EQ(d, CycProduct({{1, 1}, {57, 2}, {38, 3}, {18, 3}, {19, -5}}));
  EXPECT_EQ(d.degree(), 188);
  EXPECT_EQ(d.str(), "(t^57-1)^2 (t^38-1)^3 (t^18-1)^3 (t-1) / (t^19-1)^5");
  EXPECT_TRUE(d.is_polynomial());
}

TEST(Monodromy, RootMultiplicityMatchesCyclotomicDivision) {
  const CycProduct d = char_poly(cat().graph("fab_fig1"));
  const Poly expanded = d.expand();
  EXPECT_EQ(expanded.degree(), 188);
  for (std::int64_t k : {1, 2, 3, 5, 6, 9, 18, 19, 38, 57, 7}) {
    EXPECT_EQ(d.root_multiplicity(k), divides_times(expanded, cyclotomic(k))) << "d=" << k;
  }
}

TEST(Monodromy, EigenvalueQueries) {
  const ResGraph g = cat().graph("fab_fig1");
  const auto q = is_eigenvalue(g, Rat(-7, 38));
  EXPECT_TRUE(q.is_eigenvalue);
  EXPECT_EQ(q.order, 38);
  EXPECT_EQ(q.multiplicity, 3);
  EXPECT_EQ(is_eigenvalue(g, Rat(-1)).order, 1);
  EXPECT_FALSE(is_eigenvalue(g, Rat(1, 5)).is_eigenvalue);
  EXPECT_EQ(is_eigenvalue(g, Rat(4, 6)).order, 3);
}

TEST(Monodromy, PolesAreEigenvalues) {
  for (const std::string id : {"fab_fig1", "fab_fig2", "fab_fig3", "fab_fig4"}) {
    const ResGraph g = cat().graph(id);
    const CycProduct d = char_poly(cat().graph("fab_fig1"));
    for (const auto& p : zeta_ordinary(g).poles) {
      EXPECT_TRUE(is_eigenvalue(d, p.location).is_eigenvalue) << id << ' ' << p.location;
    }
  }
}

TEST(Monodromy, JordanReference) {
  const CycProduct j = jordan_reference();
  EXPECT_EQ(j.degree(), kJordanReferenceBlocks);
  EXPECT_TRUE(j.is_polynomial());
  const CycProduct d = char_poly(cat().graph("fab_fig1"));
  for (const auto& [m, _] : j.factors()) {
    for (std::int64_t k = 1; k <= m; ++k) {
      if (m % k == 0 && j.root_multiplicity(k) > 0) EXPECT_GE(d.root_multiplicity(k), j.root_multiplicity(k));
    }
  }
}

TEST(Monodromy, InconsistentDataIsReported) {
  // (t - 1) (t^2 - 1)^{-1} has root -1 with multiplicity -1.
  ResGraph g("bad", {{"E", VertexKind::exceptional, 2, 2, 0}, {"a", VertexKind::branch_arrow, 1, 1, 0}},
             {{"E", "a", 1}});
  try {
    char_poly(g);
    FAIL() << "expected InconsistencyError";
  } catch (const InconsistencyError& e) {
    EXPECT_EQ(e.code(), "negative-multiplicity");
  }
}
