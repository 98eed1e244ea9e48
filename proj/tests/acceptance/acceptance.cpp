// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values are written out here as literal constants and compared
// against the library; nothing is read from expected.json.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "zetatop/calculus.hpp"
#include "zetatop/error.hpp"
#include "zetatop/explore.hpp"
#include "zetatop/family.hpp"
#include "zetatop/fixtures.hpp"
#include "zetatop/monodromy.hpp"
#include "zetatop/resolve.hpp"
#include "zetatop/zeta.hpp"

using namespace zetatop;

namespace {

const FixtureCatalog& cat() { return FixtureCatalog::embedded(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      if (ok) detail.str("");
      ok = false;
      detail << what;
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

std::set<std::pair<std::int64_t, std::int64_t>> vertex_witnesses(const ResGraph& g, const PoleRecord& p) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& w : p.witnesses) {
    if (g.contains(w)) out.insert({g.vertex(w).N, g.vertex(w).nu});
  }
  return out;
}

const PoleRecord* find_pole(const ZetaReport& r, const Rat& s0) {
  for (const auto& p : r.poles) {
    if (p.location == s0) return &p;
  }
  return nullptr;
}

std::vector<Rat> rats(std::initializer_list<const char*> xs) {
  std::vector<Rat> out;
  for (const char* x : xs) out.push_back(Rat::parse(x));
  std::sort(out.begin(), out.end());
  return out;
}

void check_zeta(Outcome& o, const std::string& fixture, const std::string& printed,
                const std::vector<Rat>& doubles) {
  const ZetaReport r = zeta_ordinary(cat().graph(fixture));
  o.require(r.value == RatFunc::parse(printed), fixture + ": rational function is " + r.value.str());
  o.require(r.poles_of_order(2) == doubles, fixture + ": double poles differ");
  if (o.ok) o.detail << r.value.str();
}

void criterion1(Outcome& o) {
  const ZetaReport r = zeta_ordinary(cat().graph("fab_fig1"));
  o.require(r.value == RatFunc::parse("(70+1051s+5138s^2+7864s^3-1368s^4)/((57s+10)(38s+7)(6s+1)^2(s+1))"),
            "rational function is " + r.value.str());
  const std::vector<std::pair<Rat, int>> want = {
      {Rat(-1), 1}, {Rat(-7, 38), 1}, {Rat(-10, 57), 1}, {Rat(-1, 6), 2}};
  std::vector<std::pair<Rat, int>> got;
  for (const auto& p : r.poles) got.emplace_back(p.location, p.order);
  o.require(got == want, "pole table differs");
  if (o.ok) o.detail << "4 poles, double at -1/6";
}

void criterion2(Outcome& o) {
  const ResGraph g = cat().graph("fab_fig2");
  check_zeta(o, "fab_fig2", "(57+357s+625s^2+31s^3-486s^4)/(228(3s+1)^2(2s+1)^2(s+1))", rats({"-1/2", "-1/3"}));
  const ZetaReport r = zeta_ordinary(g);
  const PoleRecord* half = find_pole(r, Rat(-1, 2));
  const PoleRecord* third = find_pole(r, Rat(-1, 3));
  o.require(half && vertex_witnesses(g, *half) == std::set<std::pair<std::int64_t, std::int64_t>>{{18, 9}, {38, 19}},
            "witnesses of -1/2");
  o.require(third &&
                vertex_witnesses(g, *third) == std::set<std::pair<std::int64_t, std::int64_t>>{{18, 6}, {57, 19}},
            "witnesses of -1/3");
}

void criterion3(Outcome& o) {
  check_zeta(o, "fab_fig3", "-(16734s^4+88541s^3+168881s^2+134709s+36195)/(1710(3s+5)^2(2s+3)^2(s+1))",
             rats({"-3/2", "-5/3"}));
}

void criterion4(Outcome& o) {
  check_zeta(o, "fab_fig4", "(-41496s^4-91616s^3-55926s^2+1559s+7130)/(5(6s+5)^2(38s+31)(57s+46)(s+1))",
             rats({"-5/6"}));
}

void criterion5(Outcome& o) {
  const ResGraph g = cat().graph("fab_fig1");
  const CycProduct d = char_poly(g);
  o.require(milnor(g) == 188, "mu is " + std::to_string(milnor(g)));
  o.require(d == CycProduct({{1, 1}, {57, 2}, {38, 3}, {18, 3}, {19, -5}}), "char_poly is " + d.str());
  std::size_t poles = 0;
  for (const std::string fig : {"fab_fig1", "fab_fig2", "fab_fig3", "fab_fig4"}) {
    for (const auto& p : zeta_ordinary(cat().graph(fig)).poles) {
      ++poles;
      o.require(is_eigenvalue(d, p.location).multiplicity >= 1, fig + ": pole " + p.location.str());
    }
  }
  if (o.ok) o.detail << "mu = 188, " << d.str() << ", " << poles << " poles are eigenvalues";
}

void criterion6(Outcome& o) {
  CurveInput c = cat().curves("fab_curves");
  const Resolution r = resolve(c);
  o.require(canonical_form(r.graph) == canonical_form(cat().graph("fab_fig1")), "resolution differs from fab_fig1");
  const std::vector<std::pair<std::string, std::string>> figs = {
      {"omega1", "fab_fig2"}, {"omega2", "fab_fig3"}, {"omega3", "fab_fig4"}};
  for (const auto& [form, fig] : figs) {
    const ResGraph d = decorate(r.graph, r.table, cat().form(form));
    o.require(canonical_form(d) == canonical_form(cat().graph(fig)), form + " decoration differs from " + fig);
  }
  if (o.ok) o.detail << r.blowups << " blowups, fab_fig1 to fab_fig4 reproduced up to isomorphism";
}

void criterion7(Outcome& o) {
  std::size_t diffs = 0;
  for (const auto& [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {2, 5}, {3, 4}}) {
    for (std::int64_t a : {1, 2, 3}) {
      const GpqParams gp{p, q, a};
      const RatFunc zq = zeta_q(cat().gpq_graph(gp)).value;
      const RatFunc full = gpq_full_resolution(gp).value;
      o.require(zq == full, gp.str() + ": Q-graph and full resolution differ");
      if (a == 1) {
        o.require(zq == gpq_printed_closed_form(gp), gp.str() + ": printed closed form differs at a = 1");
      } else {
        try {
          if (gpq_printed_closed_form(gp) != zq) ++diffs;
        } catch (const ComputationError&) {
          ++diffs;
        }
      }
      if (a % p != 0) o.require(zq.pole_order(Rat(-a, p)) == 2, gp.str() + ": -a/p is not a double pole");
    }
  }
  o.require(zeta_q(cat().gpq_graph({2, 3, 3})).value.evaluate(Rat(0)) == Rat(1, 9), "Z(0) at (2,3,3) is not 1/9");
  if (o.ok) o.detail << "9 parameter sets agree; " << diffs << " EXPECTED-DIFF against the printed form";
}

void criterion8(Outcome& o) {
  const ResGraph g = cat().graph("fab_fig1");
  const MultTable t = complete_multtable(g, cat().multtable("fab_multtable"));
  const SearchBox box = parse_bounds("default", t);
  SweepOptions opt;
  opt.max_hits = 4;
  opt.jobs = 2;
  const SearchResult r = sweep(g, t, box, opt);
  bool omega1 = false;
  bool omega2 = false;
  std::uint64_t both = 0;
  for (const auto& c : r.classes) {
    if (c.poles == rats({"-1/2", "-1/3"})) omega1 = true;
    if (c.poles == rats({"-3/2", "-5/3"})) omega2 = true;
    const bool a = std::find(c.poles.begin(), c.poles.end(), Rat(-2, 3)) != c.poles.end();
    const bool b = std::find(c.poles.begin(), c.poles.end(), Rat(-3, 2)) != c.poles.end();
    if (a && b) both += c.count;
  }
  o.require(omega1, "no form with double-pole set {-1/2, -1/3}");
  o.require(omega2, "no form with double-pole set {-3/2, -5/3}");
  o.require(both == 0, std::to_string(both) + " forms with -2/3 and -3/2 both double");
  o.require(r.root_double_with_second == 0, "root-witnessed double pole with a second double pole");
  std::size_t a_side = 0;
  for (const auto& c : gcd_certificates(g)) {
    if (c.side != "A1") continue;
    ++a_side;
    o.require(c.excludes(3), "A-side edge " + c.edge + " admits denominator 3");
  }
  o.require(a_side > 0, "no A-side certificates");
  if (o.ok) {
    o.detail << r.forms << " forms, " << r.classes.size() << " double-pole sets, " << a_side
             << " A-side edges exclude 3";
  }
}

void criterion9(Outcome& o) {
  std::vector<std::pair<std::string, ResGraph>> standard = {
      {"node", cat().graph("node")}, {"cusp", cat().graph("cusp")}, {"fab_fig1", cat().graph("fab_fig1")}};
  for (const std::string id : {"node_curves", "cusp_curves", "fab_curves"}) {
    standard.emplace_back(id, resolve(cat().curves(id)).graph);
  }
  // (i)
  for (const auto& [id, g] : standard) {
    const ZetaReport z = zeta_ordinary(g);
    const auto d = z.poles_of_order(2);
    o.require(d.size() <= 1, id + ": more than one double pole");
    if (!d.empty()) o.require(d.front() == -z.lct, id + ": double pole is not -lct");
  }
  // (ii) and (iv)
  std::vector<std::pair<std::string, ResGraph>> ordinary = standard;
  for (const std::string id : {"fab_fig2", "fab_fig3", "fab_fig4"}) ordinary.emplace_back(id, cat().graph(id));
  for (const auto& [id, g] : ordinary) {
    o.require(zeta_q(g).value == zeta_ordinary(g).value, id + ": zeta_q differs from zeta_ordinary");
    o.require(milnor_from_resolution(g) == char_poly(g).degree(), id + ": Milnor numbers differ");
  }
  // (iii)
  const ResGraph fig1 = cat().graph("fab_fig1");
  for (const auto& [id, g] : standard) {
    const auto nu = canonical_nu(g, self_intersections(g));
    for (const auto& v : g.vertices()) {
      if (!v.is_arrow()) o.require(nu.at(v.id) == v.nu, id + ": canonical nu of " + v.id);
    }
  }
  const MultTable t = complete_multtable(fig1, cat().multtable("fab_multtable"));
  const auto k = canonical_nu(fig1, self_intersections(fig1));
  const std::vector<std::pair<std::string, std::string>> figs = {
      {"omega1", "fab_fig2"}, {"omega2", "fab_fig3"}, {"omega3", "fab_fig4"}};
  for (const auto& [form, fig] : figs) {
    const FormSpec w = cat().form(form);
    const ResGraph g = cat().graph(fig);
    for (const auto& [vid, nu0] : k) {
      std::int64_t nu = nu0;
      for (const auto& [curve, c] : w.exponents) nu += c * t.curves.at(curve).m.at(vid);
      o.require(g.vertex(vid).nu == nu, fig + ": nu of " + vid);
    }
  }
  // (v)
  const std::string ref = canonical_form(resolve(cat().curves("fab_curves")).graph);
  for (std::uint64_t seed : {7u, 11u, 2024u}) {
    ResolveOptions opt;
    opt.shuffle_seed = seed;
    o.require(canonical_form(resolve(cat().curves("fab_curves"), opt).graph) == ref,
              "resolution depends on center order (seed " + std::to_string(seed) + ")");
  }
  if (o.ok) o.detail << standard.size() << " standard graphs, " << ordinary.size() << " ordinary graphs, 3 seeds";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                           criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  (" << o.detail.str() << ", "
              << static_cast<int>(secs * 1000) / 1000.0 << " s)" << std::endl;
  }
  std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
