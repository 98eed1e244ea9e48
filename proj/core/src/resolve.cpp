#include "zetatop/resolve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json_util.hpp"
#include "zetatop/error.hpp"

namespace zetatop {

namespace {

const Poly2 kX = Poly2::monomial(Rat(1), 1, 0);
const Poly2 kY = Poly2::monomial(Rat(1), 0, 1);

bool same_curve(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return false;
  const auto& [e, c] = *a.terms().begin();
  const Rat scale = b.coeff(e.first, e.second) / c;
  if (scale.is_zero()) return false;
  return a * Poly2(scale) == b;
}

std::vector<CurveSpec> parse_curve_list(const detail::json& arr, const char* what) {
  std::vector<CurveSpec> out;
  if (!arr.is_array()) throw ValidationError("bad-curve", std::string(what) + " must be an array");
  for (const auto& jc : arr) {
    CurveSpec c;
    c.id = detail::get_string(jc, "id", what);
    c.text = detail::get_string(jc, "poly", "curve '" + c.id + "'");
    try {
      c.poly = Poly2::parse(c.text);
    } catch (const ParseError& e) {
      throw ValidationError("bad-curve", "curve '" + c.id + "': " + e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string divisor_name(const BlowupState& s, int d) {
  return d < 0 ? std::string("-") : s.divisors[static_cast<std::size_t>(d)].id;
}

}  // namespace

void CurveInput::add_default_auxiliaries() {
  const std::pair<const char*, const Poly2*> defaults[] = {{"x", &kX}, {"y", &kY}};
  for (const auto& [name, poly] : defaults) {
    bool present = false;
    for (const auto* list : {&branches, &auxiliaries}) {
      for (const auto& c : *list) present = present || c.id == name || same_curve(c.poly, *poly);
    }
    if (!present) auxiliaries.push_back({name, *poly, name});
  }
}

CurveInput parse_curve_input(std::string_view json_text) {
  const auto doc = detail::parse_json(json_text);
  if (!doc.is_object() || !doc.contains("branches")) {
    throw ValidationError("bad-curve", "curve file needs a 'branches' array");
  }
  CurveInput c;
  c.branches = parse_curve_list(doc["branches"], "branches");
  if (doc.contains("auxiliaries")) c.auxiliaries = parse_curve_list(doc["auxiliaries"], "auxiliaries");
  return c;
}

std::string serialize_curve_input(const CurveInput& c) {
  detail::json doc;
  for (const auto* list : {&c.branches, &c.auxiliaries}) {
    auto arr = detail::json::array();
    for (const auto& x : *list) arr.push_back({{"id", x.id}, {"poly", x.text.empty() ? x.poly.str() : x.text}});
    doc[list == &c.branches ? "branches" : "auxiliaries"] = std::move(arr);
  }
  return doc.dump(2) + "\n";
}

void require_valid(const CurveInput& c) {
  if (c.branches.empty()) throw ValidationError("bad-curve", "at least one branch is required");
  std::vector<const CurveSpec*> all;
  for (const auto& b : c.branches) all.push_back(&b);
  for (const auto& a : c.auxiliaries) all.push_back(&a);
  std::set<std::string> ids;
  for (const auto* x : all) {
    if (!ids.insert(x->id).second) throw ValidationError("bad-curve", "duplicate curve id '" + x->id + "'");
    if (x->poly.is_zero()) throw ValidationError("bad-curve", "curve '" + x->id + "' is the zero polynomial");
    if (!x->poly.coeff(0, 0).is_zero()) {
      throw ValidationError("bad-curve", "curve '" + x->id + "' does not pass through the origin");
    }
    if (!is_squarefree(x->poly)) {
      throw ValidationError("non-reduced-branch", "curve '" + x->id + "' has a repeated factor");
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!is_squarefree(all[i]->poly * all[j]->poly)) {
        throw ValidationError("curves-not-coprime",
                              "curves '" + all[i]->id + "' and '" + all[j]->id + "' share a component");
      }
    }
  }
}

std::vector<std::string> point_defects(const NearPoint& p) {
  std::vector<std::string> out;
  auto add = [&](const char* r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.emplace_back(r);
  };
  const std::size_t divisors = (p.on_u >= 0 ? 1U : 0U) + (p.on_v >= 0 ? 1U : 0U);
  std::vector<const LocalCurve*> smooth;
  for (const auto& c : p.curves) {
    if (c.f.order() >= 2) {
      add("singular");
    } else {
      smooth.push_back(&c);
    }
  }
  if (divisors == 0) {
    if (p.curves.size() == 1 && smooth.size() == 1) return out;
    add("no-exceptional-divisor");
    return out;
  }
  if (p.curves.size() + divisors >= 3) add("triple-point");
  for (const auto* c : smooth) {
    if (p.on_u >= 0 && c->f.coeff(0, 1).is_zero()) add("tangency");
    if (p.on_v >= 0 && c->f.coeff(1, 0).is_zero()) add("tangency");
  }
  for (std::size_t i = 0; i < smooth.size(); ++i) {
    for (std::size_t j = i + 1; j < smooth.size(); ++j) {
      const auto& f = smooth[i]->f;
      const auto& g = smooth[j]->f;
      if ((f.coeff(1, 0) * g.coeff(0, 1) - f.coeff(0, 1) * g.coeff(1, 0)).is_zero()) add("tangency");
    }
  }
  return out;
}

std::vector<Offender> ncd_check(const BlowupState& s) {
  std::vector<Offender> out;
  for (const auto& p : s.pending) out.push_back({p.where, point_defects(p)});
  return out;
}

BlowupEngine::BlowupEngine(const CurveInput& c, ResolveOptions opt) : opt_(opt) {
  require_valid(c);
  if (opt_.shuffle_seed) rng_.seed(*opt_.shuffle_seed);
  s_.curves = c.branches;
  s_.branch_count = c.branches.size();
  s_.curves.insert(s_.curves.end(), c.auxiliaries.begin(), c.auxiliaries.end());
  NearPoint origin;
  origin.where = "origin";
  for (std::size_t i = 0; i < s_.curves.size(); ++i) origin.curves.push_back({i, s_.curves[i].poly});
  origin.reasons = point_defects(origin);
  if (!origin.reasons.empty()) s_.pending.push_back(std::move(origin));
}

std::size_t BlowupEngine::next_index() {
  if (!opt_.shuffle_seed) return 0;
  return static_cast<std::size_t>(rng_() % s_.pending.size());
}

void BlowupEngine::settle(NearPoint p) {
  p.reasons = point_defects(p);
  if (!p.reasons.empty()) {
    s_.pending.push_back(std::move(p));
    return;
  }
  Incidence inc;
  if (p.curves.empty()) {
    inc.a = p.on_u;
    inc.b = p.on_v;
  } else {
    inc.a = p.on_u >= 0 ? p.on_u : p.on_v;
    inc.curve = static_cast<int>(p.curves.front().curve);
  }
  s_.incidences.push_back(inc);
}

void BlowupEngine::step() {
  if (s_.pending.empty()) return;
  if (s_.blowups >= opt_.budget) {
    throw ComputationError("budget-exceeded", "blowup budget of " + std::to_string(opt_.budget) +
                                                  " exhausted with " +
                                                  std::to_string(s_.pending.size()) +
                                                  " centers pending");
  }
  const std::size_t idx = next_index();
  NearPoint p = std::move(s_.pending[idx]);
  s_.pending.erase(s_.pending.begin() + static_cast<std::ptrdiff_t>(idx));

  const int e = static_cast<int>(s_.divisors.size());
  Divisor d;
  d.id = "E" + std::to_string(e + 1);
  d.m.assign(s_.curves.size(), 0);
  for (const int old : {p.on_u, p.on_v}) {
    if (old < 0) continue;
    auto& od = s_.divisors[static_cast<std::size_t>(old)];
    for (std::size_t c = 0; c < d.m.size(); ++c) d.m[c] += od.m[c];
    d.k += od.k;
    od.self_int -= 1;
  }
  d.k += 1;
  std::int64_t branch_mult = 0;
  for (const auto& lc : p.curves) {
    const int mult = lc.f.order();
    d.m[lc.curve] += mult;
    if (lc.curve < s_.branch_count) branch_mult += mult;
  }
  for (std::size_t c = 0; c < s_.branch_count; ++c) d.N += d.m[c];
  s_.twice_delta += branch_mult * (branch_mult - 1);

  std::map<Rat, NearPoint> finite;
  NearPoint inf;
  bool inf_used = p.on_u >= 0;
  std::vector<std::pair<std::size_t, Poly>> irrational;
  for (const auto& lc : p.curves) {
    const int mult = lc.f.order();
    const Poly2 f1 = lc.f.chart_u(mult);
    const Poly r = f1.restrict_first_zero();
    const auto rr = rational_roots(r);
    for (const auto& [t, k] : rr.roots) finite[t].curves.push_back({lc.curve, f1.shift_second(t)});
    if (rr.cofactor.degree() >= 1) irrational.emplace_back(lc.curve, rr.cofactor);
    if (r.degree() < mult) {
      inf.curves.push_back({lc.curve, lc.f.chart_v(mult)});
      inf_used = true;
    }
  }
  if (p.on_v >= 0) finite[Rat(0)].on_v = p.on_v;

  for (std::size_t i = 0; i < irrational.size(); ++i) {
    const auto& [c, q] = irrational[i];
    bool simple = is_squarefree(q);
    for (std::size_t j = 0; simple && j < irrational.size(); ++j) {
      if (j != i && gcd(q, irrational[j].second).degree() >= 1) simple = false;
    }
    if (!simple) {
      throw ComputationError("non-rational-center",
                             "center on " + d.id + " after blowing up " + p.where +
                                 " has irrational coordinate t with minimal polynomial " +
                                 q.content_primitive().second.str("t"));
    }
  }

  s_.divisors.push_back(std::move(d));
  ++s_.blowups;
  const std::string& name = s_.divisors.back().id;
  for (const auto& [c, q] : irrational) {
    for (int i = 0; i < q.degree(); ++i) s_.incidences.push_back({e, -1, static_cast<int>(c)});
  }
  for (auto& [t, np] : finite) {
    np.on_u = e;
    np.where = name + ":t=" + t.str();
    settle(std::move(np));
  }
  if (inf_used) {
    inf.on_v = e;
    inf.on_u = p.on_u;
    inf.where = name + ":t=inf";
    settle(std::move(inf));
  }
}

void BlowupEngine::run() {
  while (!done()) step();
}

Resolution BlowupEngine::result() const {
  if (!done()) {
    throw ComputationError("unresolved", std::to_string(s_.pending.size()) + " centers still pending");
  }
  Resolution out;
  out.blowups = s_.blowups;
  ResGraph g;
  g.set_label("resolution");
  if (s_.divisors.empty()) {
    const auto& b = s_.curves.front();
    g.add_vertex({b.id, VertexKind::branch_arrow, 1, 1, 0});
    out.graph = std::move(g);
    out.milnor = 0;
    return out;
  }
  for (const auto& d : s_.divisors) {
    g.add_vertex({d.id, VertexKind::exceptional, d.N, d.k + 1, 0});
    out.table.canonical[d.id] = d.k;
  }
  std::map<int, int> attachments_of;
  for (const auto& inc : s_.incidences) {
    if (inc.curve >= 0) ++attachments_of[inc.curve];
  }
  std::map<int, int> seen;
  std::int64_t arrows = 0;
  for (const auto& inc : s_.incidences) {
    const std::string a = divisor_name(s_, inc.a);
    if (inc.curve < 0) {
      g.add_edge({a, divisor_name(s_, inc.b), 1});
      continue;
    }
    const auto c = static_cast<std::size_t>(inc.curve);
    const auto& spec = s_.curves[c];
    if (c < s_.branch_count) {
      const int n = ++seen[inc.curve];
      const std::string id = attachments_of[inc.curve] == 1 ? spec.id : spec.id + "#" + std::to_string(n);
      g.add_vertex({id, VertexKind::branch_arrow, 1, 1, 0});
      g.add_edge({a, id, 1});
      ++arrows;
    } else {
      out.table.curves[spec.id].attachment.push_back({a, 1});
    }
  }
  for (std::size_t c = s_.branch_count; c < s_.curves.size(); ++c) {
    auto& cm = out.table.curves[s_.curves[c].id];
    for (const auto& d : s_.divisors) cm.m[d.id] = d.m[c];
  }
  for (const auto& d : s_.divisors) {
    std::int64_t sum = d.N * d.self_int;
    for (const auto& nb : g.neighbors(d.id)) sum += g.vertex(nb).N;
    if (sum != 0) {
      throw InconsistencyError("pullback-relation",
                               "N*E^2 + sum of adjacent N is " + std::to_string(sum) + " on " + d.id);
    }
  }
  out.graph = std::move(g);
  out.milnor = s_.twice_delta - arrows + 1;
  return out;
}

Resolution resolve(const CurveInput& c, ResolveOptions opt) {
  BlowupEngine engine(c, opt);
  engine.run();
  return engine.result();
}

std::int64_t milnor_from_resolution(const ResGraph& g) {
  if (g.exceptional_count() == 0) return 0;
  std::int64_t mu = 1;
  for (const auto& v : g.vertices()) {
    if (v.kind == VertexKind::exceptional) mu -= chi_open_of_f(g, v.id) * v.N;
  }
  return mu;
}

}  // namespace zetatop
