#include "zetatop/zeta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "zetatop/error.hpp"

namespace zetatop {

std::vector<Rat> ZetaReport::poles_of_order(int order) const {
  std::vector<Rat> out;
  for (const auto& p : poles) {
    if (p.order == order) out.push_back(p.location);
  }
  return out;
}

namespace {

RatFunc stratum_sum(const ResGraph& g, bool with_orders) {
  RatFunc z;
  for (const auto& v : g.vertices()) {
    if (v.is_arrow()) continue;
    std::int64_t weight = chi_open(g, v.id);
    if (with_orders) {
      for (const auto& q : g.qpoints()) {
        if (q.vertex == v.id) weight += q.order;
      }
    }
    if (weight != 0) z += RatFunc(Rat(weight)) * RatFunc::inverse_linear(v.nu, v.N);
  }
  for (const auto& e : g.edges()) {
    const auto& a = g.vertex(e.a);
    const auto& b = g.vertex(e.b);
    const Rat weight = with_orders ? Rat(e.order) : Rat(1);
    z += RatFunc(weight) * RatFunc::inverse_linear(a.nu, a.N) * RatFunc::inverse_linear(b.nu, b.N);
  }
  if (g.exceptional_count() == 0) {
    // Smooth germ: the origin lies on the branch only.
    const auto& v = g.vertices().front();
    z = RatFunc::inverse_linear(v.nu, v.N);
  }
  return z;
}

ZetaReport make_report(const ResGraph& g, RatFunc value) {
  ZetaReport r;
  r.poles = pole_table(g, value);
  r.value = std::move(value);
  r.lct = lct(g);
  return r;
}

}  // namespace

std::vector<PoleRecord> pole_table(const ResGraph& g, const RatFunc& value) {
  std::vector<PoleRecord> out;
  for (const auto& [f, k] : value.denominator()) {
    PoleRecord p;
    p.location = f.root();
    p.order = k;
    auto vanishes = [&](const Vertex& v) { return v.N >= 1 && Rat(v.nu, v.N) == -p.location; };
    for (const auto& v : g.vertices()) {
      if (vanishes(v)) p.witnesses.push_back(v.id);
    }
    for (const auto& e : g.edges()) {
      if (vanishes(g.vertex(e.a)) && vanishes(g.vertex(e.b))) p.witnesses.push_back(e.id());
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const PoleRecord& a, const PoleRecord& b) { return a.location < b.location; });
  return out;
}

ZetaReport zeta_ordinary(const ResGraph& g) {
  require_valid(g);
  if (!g.is_ordinary()) {
    throw ValidationError("not-ordinary",
                          "graph carries quotient orders; use the Q-resolution formula");
  }
  return make_report(g, stratum_sum(g, false));
}

ZetaReport zeta_q(const ResGraph& g) {
  require_valid(g);
  return make_report(g, stratum_sum(g, true));
}

Rat lct(const ResGraph& g) {
  std::optional<Rat> best;
  for (const auto& v : g.vertices()) {
    if (v.N < 1) continue;
    const Rat r(v.nu, v.N);
    if (!best || r < *best) best = r;
  }
  return best.value_or(Rat(0));
}

std::vector<EdgeCandidate> double_pole_candidates(const ResGraph& g) {
  std::vector<EdgeCandidate> out;
  for (const auto& e : g.edges()) {
    const auto& a = g.vertex(e.a);
    const auto& b = g.vertex(e.b);
    if (a.is_arrow() || b.is_arrow()) continue;
    EdgeCandidate c;
    c.edge = e.id();
    c.a = e.a;
    c.b = e.b;
    c.N_a = a.N;
    c.N_b = b.N;
    c.gcd = std::gcd(a.N, b.N);
    for (std::int64_t d = 1; d <= c.gcd; ++d) {
      if (c.gcd % d == 0) c.admissible_denominators.push_back(d);
    }
    c.active = Rat(a.nu, a.N) == Rat(b.nu, b.N);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PoleSummary> fast_poles(const ResGraph& g) {
  // Candidate poles are the roots of nu + N*s with N >= 1. A term with two
  // vanishing factors is 1/(N_a N_b (s - s0)^2) exactly, so its coefficient is
  // strictly positive and double poles never cancel; simple poles need the
  // residue.
  struct Term {
    std::int64_t weight;
    std::size_t a;
    std::size_t b;  // == npos for vertex terms
  };
  constexpr auto npos = static_cast<std::size_t>(-1);
  const auto& vs = g.vertices();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].is_arrow()) continue;
    std::int64_t w = chi_open(g, vs[i].id);
    for (const auto& q : g.qpoints()) {
      if (q.vertex == vs[i].id) w += q.order;
    }
    if (w != 0) terms.push_back({w, i, npos});
  }
  for (const auto& e : g.edges()) terms.push_back({e.order, g.index_of(e.a), g.index_of(e.b)});

  std::set<Rat> candidates;
  for (const auto& v : vs) {
    if (v.N >= 1) candidates.insert(Rat(-v.nu, v.N));
  }
  if (g.exceptional_count() == 0) return {{Rat(-vs[0].nu, vs[0].N), 1}};

  std::vector<PoleSummary> out;
  for (const auto& s0 : candidates) {
    auto vanishes = [&](std::size_t i) { return vs[i].N >= 1 && Rat(vs[i].nu) + Rat(vs[i].N) * s0 == 0; };
    bool double_pole = false;
    Rat residue;
    for (const auto& t : terms) {
      const bool va = vanishes(t.a);
      if (t.b == npos) {
        if (va) residue += Rat(t.weight, vs[t.a].N);
        continue;
      }
      const bool vb = vanishes(t.b);
      if (va && vb) {
        double_pole = true;
      } else if (va) {
        residue += Rat(t.weight) / (Rat(vs[t.a].N) * (Rat(vs[t.b].nu) + Rat(vs[t.b].N) * s0));
      } else if (vb) {
        residue += Rat(t.weight) / (Rat(vs[t.b].N) * (Rat(vs[t.a].nu) + Rat(vs[t.a].N) * s0));
      }
    }
    if (double_pole) {
      out.push_back({s0, 2});
    } else if (!residue.is_zero()) {
      out.push_back({s0, 1});
    }
  }
  return out;
}

std::string render_text(const ZetaReport& r) {
  std::ostringstream os;
  os << "Z(s) = " << r.value.str() << '\n';
  os << "lct  = " << r.lct << '\n';
  os << "poles:\n";
  for (const auto& p : r.poles) {
    os << "  s0 = " << p.location << "  order " << p.order << "  witnesses:";
    for (const auto& w : p.witnesses) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

std::string render_json(const ZetaReport& r) {
  using detail::json;
  json doc;
  doc["value"] = r.value.str();
  json poles = json::array();
  for (const auto& p : r.poles) {
    poles.push_back({{"s0", p.location.str()}, {"order", p.order}, {"witnesses", p.witnesses}});
  }
  doc["poles"] = std::move(poles);
  doc["lct"] = r.lct.str();
  return doc.dump(2) + "\n";
}

}  // namespace zetatop
