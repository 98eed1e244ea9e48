#include "zetatop/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "zetatop/error.hpp"
#include "zetatop/explore.hpp"
#include "zetatop/family.hpp"
#include "zetatop/monodromy.hpp"
#include "zetatop/zeta.hpp"

namespace zetatop {

namespace {

using detail::json;

class Runner {
 public:
  Runner(const FixtureCatalog& cat, const VerifyOptions& opt) : cat_(cat), opt_(opt) {}

  // Runs fn as one check; a thrown Error or a false result is a failure.
  void check(int criterion, const std::string& group, const std::string& fixture, const std::string& name,
             const std::function<std::string()>& fn) {
    CheckResult r{criterion, group, fixture, name, CheckStatus::pass, ""};
    try {
      r.detail = fn();
    } catch (const ExpectedDiff& e) {
      r.status = CheckStatus::expected_diff;
      r.detail = e.what;
    } catch (const Failure& e) {
      r.status = CheckStatus::fail;
      r.detail = e.what;
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.detail = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  struct Failure {
    std::string what;
  };
  struct ExpectedDiff {
    std::string what;
  };

  [[noreturn]] static void fail(const std::string& what) { throw Failure{what}; }
  static void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }

  const json& expected() {
    if (!expected_) expected_ = detail::parse_json(cat_.text("expected"));
    return *expected_;
  }

  ResolveOptions resolve_opts() const {
    ResolveOptions r;
    r.budget = opt_.budget;
    return r;
  }

  const FixtureCatalog& cat_;
  const VerifyOptions& opt_;
  VerifyReport report_;
  std::optional<json> expected_;
};

std::string rats(const std::vector<Rat>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

std::vector<Rat> rat_list(const json& arr) {
  std::vector<Rat> out;
  for (const auto& x : arr) out.push_back(Rat::parse(x.get<std::string>()));
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::int64_t, std::int64_t> factor_map(const json& obj) {
  std::map<std::int64_t, std::int64_t> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) out[std::stoll(it.key())] = it.value().get<std::int64_t>();
  return out;
}

std::vector<Rat> sorted_doubles(const ZetaReport& r) {
  auto d = r.poles_of_order(2);
  std::sort(d.begin(), d.end());
  return d;
}

const std::map<std::string, std::string> kFigureForm = {
    {"fab_fig2", "omega1"}, {"fab_fig3", "omega2"}, {"fab_fig4", "omega3"}};

void group_zeta(Runner& run) {
  for (const std::string fig : {"fab_fig1", "fab_fig2", "fab_fig3", "fab_fig4"}) {
    const int crit = fig.back() - '0';
    run.check(crit, "zeta", fig, "rational function", [&] {
      const auto z = zeta_ordinary(run.cat_.graph(fig));
      const RatFunc want = RatFunc::parse(run.expected().at(fig).at("zeta").get<std::string>());
      Runner::require(z.value == want, "computed " + z.value.str() + ", expected " + want.str());
      return z.value.str();
    });
  }
  run.check(1, "zeta", "fab_fig1", "pole table", [&] {
    const auto z = zeta_ordinary(run.cat_.graph("fab_fig1"));
    std::vector<std::pair<Rat, int>> got;
    for (const auto& p : z.poles) got.emplace_back(p.location, p.order);
    std::vector<std::pair<Rat, int>> want;
    for (const auto& p : run.expected().at("fab_fig1").at("poles")) {
      want.emplace_back(Rat::parse(p.at(0).get<std::string>()), p.at(1).get<int>());
    }
    std::sort(want.begin(), want.end());
    Runner::require(got == want, "pole table differs");
    return std::to_string(got.size()) + " poles";
  });
  for (const std::string fig : {"fab_fig2", "fab_fig3", "fab_fig4"}) {
    const int crit = fig.back() - '0';
    run.check(crit, "zeta", fig, "double poles and witnesses", [&] {
      const ResGraph g = run.cat_.graph(fig);
      const auto z = zeta_ordinary(g);
      const auto& want = run.expected().at(fig).at("double_poles");
      std::vector<Rat> want_locs;
      for (auto it = want.begin(); it != want.end(); ++it) want_locs.push_back(Rat::parse(it.key()));
      std::sort(want_locs.begin(), want_locs.end());
      const auto got = sorted_doubles(z);
      Runner::require(got == want_locs, "double poles " + rats(got) + ", expected " + rats(want_locs));
      for (auto it = want.begin(); it != want.end(); ++it) {
        if (it.value().empty()) continue;
        std::set<std::pair<std::int64_t, std::int64_t>> expect_w;
        for (const auto& w : it.value()) expect_w.emplace(w.at(0).get<std::int64_t>(), w.at(1).get<std::int64_t>());
        std::set<std::pair<std::int64_t, std::int64_t>> got_w;
        for (const auto& p : z.poles) {
          if (p.location != Rat::parse(it.key())) continue;
          for (const auto& w : p.witnesses) {
            if (g.contains(w) && !g.vertex(w).is_arrow()) got_w.emplace(g.vertex(w).N, g.vertex(w).nu);
          }
        }
        Runner::require(got_w == expect_w, "witnesses of " + it.key() + " differ");
      }
      return rats(got);
    });
  }
}

void group_monodromy(Runner& run) {
  run.check(5, "monodromy", "fab_fig1", "Milnor number and characteristic polynomial", [&] {
    const ResGraph g = run.cat_.graph("fab_fig1");
    const auto& e = run.expected().at("fab_fig1");
    const CycProduct d = char_poly(g);
    const CycProduct want(factor_map(e.at("char_poly")));
    Runner::require(d == want, "char_poly " + d.str() + ", expected " + want.str());
    Runner::require(d.str() == e.at("char_poly_text").get<std::string>(), "rendering differs: " + d.str());
    const auto mu = milnor(g);
    Runner::require(mu == e.at("milnor").get<std::int64_t>(), "mu = " + std::to_string(mu));
    return d.str() + ", mu = " + std::to_string(mu);
  });
  for (const std::string fig : {"fab_fig1", "fab_fig2", "fab_fig3", "fab_fig4"}) {
    run.check(5, "monodromy", fig, "every pole is an eigenvalue", [&] {
      const ResGraph g = run.cat_.graph(fig);
      const CycProduct d = char_poly(g);
      const auto z = zeta_ordinary(g);
      for (const auto& p : z.poles) {
        const auto q = is_eigenvalue(d, p.location);
        Runner::require(q.multiplicity >= 1, "pole " + p.location.str() + " is not an eigenvalue");
      }
      return std::to_string(z.poles.size()) + " poles checked";
    });
  }
  run.check(5, "monodromy", "expected", "Jordan reference roots", [&] {
    const auto& e = run.expected().at("fab_fig1");
    const CycProduct j(factor_map(e.at("jordan_size2")));
    Runner::require(j == jordan_reference(), "stored reference differs from the library constant");
    Runner::require(e.at("jordan_size2_blocks").get<int>() == kJordanReferenceBlocks, "block count differs");
    Runner::require(j.is_polynomial() && j.degree() == kJordanReferenceBlocks, "reference degree is not 9");
    for (const auto& s : rat_list(e.at("jordan_double_poles"))) {
      Runner::require(is_eigenvalue(j, s).multiplicity >= 1, s.str() + " is not a root of the reference");
    }
    return j.str();
  });
  for (const std::string fx : {"node", "cusp"}) {
    run.check(5, "monodromy", fx, "classical characteristic polynomial", [&] {
      const ResGraph g = run.cat_.graph(fx);
      const auto& e = run.expected().at(fx);
      const CycProduct d = char_poly(g);
      Runner::require(d == CycProduct(factor_map(e.at("char_poly"))), "char_poly " + d.str());
      Runner::require(milnor(g) == e.at("milnor").get<std::int64_t>(), "mu differs");
      return d.str();
    });
  }
}

void group_resolve(Runner& run) {
  auto resolved = std::make_shared<std::optional<Resolution>>();
  run.check(6, "resolve", "fab_curves", "resolution matches the standard-form graph", [&] {
    *resolved = resolve(run.cat_.curves("fab_curves"), run.resolve_opts());
    const ResGraph fig = run.cat_.graph("fab_fig1");
    Runner::require(canonical_form((*resolved)->graph) == canonical_form(fig),
                    "resolved graph is not isomorphic to fab_fig1 with equal (N, nu)");
    return std::to_string((*resolved)->blowups) + " blowups";
  });
  for (const auto& [fig, form] : kFigureForm) {
    run.check(6, "resolve", fig, "decoration of the resolution with " + form, [&, fig = fig, form = form] {
      Runner::require(resolved->has_value(), "resolution unavailable");
      const ResGraph d = decorate((*resolved)->graph, (*resolved)->table, run.cat_.form(form));
      Runner::require(canonical_form(d) == canonical_form(run.cat_.graph(fig)),
                      "decorated resolution is not isomorphic to " + fig);
      return std::string("isomorphic");
    });
    run.check(6, "resolve", fig, "decoration of the fixture graph with " + form, [&, fig = fig, form = form] {
      const ResGraph g = run.cat_.graph("fab_fig1");
      const MultTable t = complete_multtable(g, run.cat_.multtable("fab_multtable"));
      const ResGraph d = decorate(g, t, run.cat_.form(form));
      Runner::require(canonical_form(d) == canonical_form(run.cat_.graph(fig)),
                      "nu column or form arrows differ from " + fig);
      return std::string("isomorphic");
    });
  }
  run.check(6, "resolve", "fab_curves_a4b5", "graph shape for a=4, b=5", [&] {
    const auto r = resolve(run.cat_.curves("fab_curves_a4b5"), run.resolve_opts());
    Runner::require(canonical_form(r.graph) == canonical_form(run.cat_.graph("fab_fig1")),
                    "a=4, b=5 resolution differs from fab_fig1");
    return std::string("isomorphic");
  });
  for (const std::string fx : {"node", "cusp"}) {
    run.check(6, "resolve", fx + "_curves", "resolution matches " + fx, [&] {
      const auto r = resolve(run.cat_.curves(fx + "_curves"), run.resolve_opts());
      Runner::require(canonical_form(r.graph) == canonical_form(run.cat_.graph(fx)), "not isomorphic to " + fx);
      const MultTable t = complete_multtable(run.cat_.graph(fx), run.cat_.multtable(fx + "_multtable"));
      for (const auto& [curve, cm] : t.curves) {
        std::vector<std::int64_t> a;
        std::vector<std::int64_t> b;
        for (const auto& [v, m] : cm.m) a.push_back(m);
        for (const auto& [v, m] : r.table.curves.at(curve).m) b.push_back(m);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        Runner::require(a == b, "multiplicities of " + curve + " differ");
      }
      return std::to_string(r.blowups) + " blowups";
    });
  }
}

void group_family(Runner& run) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> pqs = {{2, 3}, {2, 5}, {3, 4}};
  for (const auto& [p, q] : pqs) {
    for (std::int64_t a = 1; a <= 3; ++a) {
      const GpqParams gp{p, q, a};
      const std::string fx = "gpq_fig5" + gp.str();
      run.check(7, "family", fx, "Q-graph equals full resolution", [&, gp] {
        const RatFunc zq = zeta_q(run.cat_.gpq_graph(gp)).value;
        const RatFunc full = gpq_full_resolution(gp, run.resolve_opts()).value;
        Runner::require(zq == full, "Q-graph " + zq.str() + " vs resolution " + full.str());
        Runner::require(gpq_derived_closed_form(gp) == zq, "derived closed form differs");
        return zq.str();
      });
      run.check(7, "family", fx, "printed closed form", [&, gp] {
        const RatFunc zq = zeta_q(run.cat_.gpq_graph(gp)).value;
        if (gp.a == 1) {
          const RatFunc printed = gpq_printed_closed_form(gp);
          Runner::require(printed == zq, "printed form " + printed.str() + " differs at a = 1");
          return std::string("equal");
        }
        if (gp.a == gp.p) throw Runner::ExpectedDiff{"printed form undefined at a = p"};
        const RatFunc printed = gpq_printed_closed_form(gp);
        Runner::require(printed != zq, "printed form unexpectedly agrees for a > 1");
        throw Runner::ExpectedDiff{"Z(0): engines " + zq.evaluate(Rat(0)).str() + ", printed " +
                                   printed.evaluate(Rat(0)).str()};
      });
      if (a % p != 0) {
        run.check(7, "family", fx, "double pole at -a/p", [&, gp] {
          const RatFunc zq = zeta_q(run.cat_.gpq_graph(gp)).value;
          const int k = zq.pole_order(Rat(-gp.a, gp.p));
          Runner::require(k == 2, "pole order " + std::to_string(k));
          return std::string("order 2");
        });
      }
    }
  }
  run.check(7, "family", "gpq_fig5(p=2, q=3, a=3)", "reference values at s = 0", [&] {
    const auto& e = run.expected().at("gpq_fig5");
    const GpqParams gp{2, 3, 3};
    const Rat engines = zeta_q(run.cat_.gpq_graph(gp)).value.evaluate(Rat(0));
    const Rat printed = gpq_printed_closed_form(gp).evaluate(Rat(0));
    Runner::require(engines == Rat::parse(e.at("value_233_engines").at("0").get<std::string>()), "engines give " + engines.str());
    Runner::require(printed == Rat::parse(e.at("value_233_printed").at("0").get<std::string>()), "printed gives " + printed.str());
    const GpqParams one{2, 3, 1};
    const RatFunc z1 = zeta_q(run.cat_.gpq_graph(one)).value;
    for (auto it = e.at("value_231").begin(); it != e.at("value_231").end(); ++it) {
      Runner::require(z1.evaluate(Rat::parse(it.key())) == Rat::parse(it.value().get<std::string>()),
                      "(2,3,1) value at " + it.key());
    }
    return "engines " + engines.str() + ", printed " + printed.str();
  });
}

void group_explore(Runner& run) {
  const ResGraph g = run.cat_.graph("fab_fig1");
  std::optional<SearchResult> res;
  run.check(8, "explore", "fab_fig1", "bounded sweep", [&] {
    const MultTable t = complete_multtable(g, run.cat_.multtable("fab_multtable"));
    const SearchBox box = parse_bounds(run.opt_.bounds.empty() ? "default" : run.opt_.bounds, t);
    SweepOptions o;
    o.jobs = run.opt_.jobs;
    o.max_hits = 4;
    res = sweep(g, t, box, o);
    return std::to_string(res->forms) + " forms, " + std::to_string(res->classes.size()) + " double-pole sets";
  });
  auto has_class = [&](const std::vector<Rat>& want) {
    return res && std::any_of(res->classes.begin(), res->classes.end(),
                              [&](const DoublePoleClass& c) { return c.poles == want; });
  };
  const auto& r = run.expected().at("remark");
  for (const char* key : {"standard_double", "omega1_double", "omega2_double", "omega3_double"}) {
    run.check(8, "explore", "fab_fig1", std::string("double-pole set ") + key, [&, key] {
      const auto want = rat_list(r.at(key));
      Runner::require(has_class(want), "no form with double poles exactly " + rats(want));
      return rats(want);
    });
  }
  run.check(8, "explore", "fab_fig1", "no form with both -2/3 and -3/2 double", [&] {
    Runner::require(res.has_value(), "sweep unavailable");
    const auto pair = rat_list(r.at("pair"));
    std::uint64_t n = 0;
    for (const auto& c : res->classes) {
      if (std::includes(c.poles.begin(), c.poles.end(), pair.begin(), pair.end())) n += c.count;
    }
    Runner::require(n == 0, std::to_string(n) + " forms carry both");
    return std::string("0 forms");
  });
  run.check(8, "explore", "fab_fig1", "root-witnessed double pole is alone", [&] {
    Runner::require(res.has_value(), "sweep unavailable");
    Runner::require(res->root_double_with_second == 0,
                    std::to_string(res->root_double_with_second) + " forms with a second double pole");
    return std::to_string(res->root_double_forms) + " root-witnessed forms";
  });
  run.check(8, "explore", "fab_fig1", "gcd certificates exclude denominator 3 on the A side", [&] {
    const auto d = r.at("excluded_denominator").get<std::int64_t>();
    std::size_t n = 0;
    for (const auto& c : gcd_certificates(g)) {
      if (c.side != "A1") continue;
      ++n;
      Runner::require(c.excludes(d), c.str() + " admits " + std::to_string(d));
    }
    Runner::require(n > 0, "no A-side edges found");
    return std::to_string(n) + " edges";
  });
}

void group_properties(Runner& run) {
  auto standard_graphs = [&] {
    std::vector<std::pair<std::string, ResGraph>> out;
    for (const std::string fx : {"node", "cusp", "fab_fig1"}) out.emplace_back(fx, run.cat_.graph(fx));
    for (const std::string fx : {"node_curves", "cusp_curves", "fab_curves"}) {
      out.emplace_back("resolve(" + fx + ")", resolve(run.cat_.curves(fx), run.resolve_opts()).graph);
    }
    out.emplace_back("resolve(gpq(2,5))", resolve(gpq_curve_input({2, 5, 1}), run.resolve_opts()).graph);
    return out;
  };
  std::vector<std::pair<std::string, ResGraph>> std_graphs;
  run.check(9, "properties", "standard forms", "at most one double pole, at -lct", [&] {
    std_graphs = standard_graphs();
    for (const auto& [name, g] : std_graphs) {
      const auto z = zeta_ordinary(g);
      const auto d = z.poles_of_order(2);
      Runner::require(d.size() <= 1, name + " has " + std::to_string(d.size()) + " double poles");
      if (!d.empty()) Runner::require(d.front() == -z.lct, name + " double pole is not -lct");
    }
    return std::to_string(std_graphs.size()) + " graphs";
  });
  run.check(9, "properties", "ordinary graphs", "Q formula agrees with the ordinary formula", [&] {
    std::size_t n = 0;
    for (const std::string fx : {"fab_fig1", "fab_fig2", "fab_fig3", "fab_fig4", "node", "cusp"}) {
      const ResGraph g = run.cat_.graph(fx);
      Runner::require(zeta_q(g).value == zeta_ordinary(g).value, fx + " differs");
      ++n;
    }
    for (const auto& [name, g] : std_graphs) {
      Runner::require(zeta_q(g).value == zeta_ordinary(g).value, name + " differs");
      ++n;
    }
    return std::to_string(n) + " graphs";
  });
  for (const std::string fx : {"fab_fig1", "node", "cusp"}) {
    run.check(9, "properties", fx, "canonical nu from self-intersections", [&, fx] {
      const ResGraph g = run.cat_.graph(fx);
      const auto nu = canonical_nu(g, self_intersections(g));
      for (const auto& v : g.vertices()) {
        if (v.is_arrow()) continue;
        Runner::require(nu.at(v.id) == v.nu, fx + ": nu of " + v.id + " is " + std::to_string(nu.at(v.id)) +
                                                 ", fixture has " + std::to_string(v.nu));
      }
      return std::string("nu column reproduced");
    });
  }
  for (const auto& [fig, form] : kFigureForm) {
    run.check(9, "properties", fig, "nu column from canonical nu and curve multiplicities", [&, fig = fig, form = form] {
      const ResGraph base = run.cat_.graph("fab_fig1");
      MultTable t = run.cat_.multtable("fab_multtable");
      const auto nu0 = canonical_nu(base, self_intersections(base));
      for (const auto& [v, nu] : nu0) t.canonical[v] = nu - 1;
      t = complete_multtable(base, t);
      const ResGraph d = decorate(base, t, run.cat_.form(form));
      const ResGraph want = run.cat_.graph(fig);
      for (const auto& v : want.vertices()) {
        if (v.is_arrow()) continue;
        Runner::require(d.vertex(v.id).nu == v.nu, fig + ": nu of " + v.id + " is " +
                                                       std::to_string(d.vertex(v.id).nu) + ", fixture has " +
                                                       std::to_string(v.nu));
      }
      return std::string("nu column reproduced");
    });
  }
  run.check(9, "properties", "all graphs", "Milnor number agreement", [&] {
    std::size_t n = 0;
    for (const std::string fx : {"fab_fig1", "node", "cusp"}) {
      const ResGraph g = run.cat_.graph(fx);
      Runner::require(char_poly(g).degree() == milnor_from_resolution(g), fx + " disagrees");
      ++n;
    }
    for (const std::string fx : {"node_curves", "cusp_curves", "fab_curves"}) {
      const auto r = resolve(run.cat_.curves(fx), run.resolve_opts());
      Runner::require(milnor(r.graph) == r.milnor, fx + ": graph and delta invariants disagree");
      ++n;
    }
    return std::to_string(n) + " checks";
  });
  run.check(9, "properties", "fab_curves", "resolution independent of center order", [&] {
    for (const std::string fx : {"fab_curves", "cusp_curves"}) {
      const CurveInput c = run.cat_.curves(fx);
      const std::string ref = canonical_form(resolve(c, run.resolve_opts()).graph);
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        ResolveOptions o = run.resolve_opts();
        o.shuffle_seed = seed;
        const auto r = resolve(c, o);
        Runner::require(canonical_form(r.graph) == ref, fx + ": seed " + std::to_string(seed) + " differs");
      }
    }
    return std::string("4 seeds");
  });
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::expected_diff:
      return "EXPECTED-DIFF";
  }
  return "?";
}

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

const std::vector<std::string>& verify_groups() {
  static const std::vector<std::string> g = {"zeta", "monodromy", "resolve", "family", "explore", "properties"};
  return g;
}

VerifyReport run_verify(const FixtureCatalog& catalog, const VerifyOptions& opt) {
  if (opt.only) {
    const auto& g = verify_groups();
    if (std::find(g.begin(), g.end(), *opt.only) == g.end()) {
      throw ValidationError("unknown-group", "unknown verify group '" + *opt.only + "'");
    }
  }
  Runner run(catalog, opt);
  const std::vector<std::pair<std::string, void (*)(Runner&)>> groups = {
      {"zeta", group_zeta},     {"monodromy", group_monodromy}, {"resolve", group_resolve},
      {"family", group_family}, {"explore", group_explore},     {"properties", group_properties}};
  for (const auto& [name, fn] : groups) {
    if (opt.only && *opt.only != name) continue;
    try {
      fn(run);
    } catch (const std::exception& e) {
      run.report_.checks.push_back({0, name, "", "group setup", CheckStatus::fail, e.what()});
    }
  }
  return std::move(run.report_);
}

std::string render_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << to_string(c.status) << "  [" << c.criterion << ' ' << c.group << "] " << c.fixture << ": " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
  os << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::expected_diff) << " expected differences, "
     << r.count(CheckStatus::fail) << " failed\n";
  return os.str();
}

std::string render_json(const VerifyReport& r) {
  json doc;
  auto arr = json::array();
  for (const auto& c : r.checks) {
    arr.push_back({{"status", std::string(to_string(c.status))},
                   {"criterion", c.criterion},
                   {"group", c.group},
                   {"fixture", c.fixture},
                   {"check", c.name},
                   {"detail", c.detail}});
  }
  doc["checks"] = std::move(arr);
  doc["passed"] = r.count(CheckStatus::pass);
  doc["expected_diff"] = r.count(CheckStatus::expected_diff);
  doc["failed"] = r.count(CheckStatus::fail);
  return doc.dump(2) + "\n";
}

}  // namespace zetatop
