#include "zetatop/family.hpp"

#include <numeric>

#include "zetatop/calculus.hpp"
#include "zetatop/error.hpp"

namespace zetatop {

std::string GpqParams::str() const {
  return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ", a=" + std::to_string(a) + ")";
}

void require_valid(const GpqParams& g) {
  std::vector<std::string> v;
  if (!(1 < g.p && g.p < g.q)) v.push_back("need 1 < p < q, got " + g.str());
  if (std::gcd(g.p, g.q) != 1) v.push_back("p and q must be coprime, got " + g.str());
  if (g.a < 1) v.push_back("need a >= 1, got " + g.str());
  if (g.q > 1000) v.push_back("q too large");
  if (!v.empty()) throw ValidationError(std::move(v));
}

ResGraph build_gpq_qgraph(const GpqParams& g) {
  require_valid(g);
  const std::int64_t N = g.p * (g.p + g.q);
  const std::int64_t nu = g.a * (g.p + g.q);
  ResGraph r;
  r.set_label("gpq_fig5" + g.str());
  r.add_vertex({"E1", VertexKind::exceptional, N, nu, 0});
  r.add_vertex({"E2", VertexKind::exceptional, N, nu, 0});
  r.add_vertex({"f1", VertexKind::branch_arrow, 1, 1, 0});
  r.add_vertex({"f2", VertexKind::branch_arrow, 1, 1, 0});
  r.add_vertex({"w1", VertexKind::form_arrow, 0, g.a, 0});
  r.add_vertex({"w2", VertexKind::form_arrow, 0, g.a, 0});
  r.add_edge({"E1", "E2", g.q * g.q - g.p * g.p});
  r.add_edge({"E1", "f1", 1});
  r.add_edge({"E2", "f2", 1});
  r.add_edge({"E1", "w1", g.p});
  r.add_edge({"E2", "w2", g.p});
  require_valid(r);
  return r;
}

RatFunc gpq_printed_closed_form(const GpqParams& g) {
  require_valid(g);
  if (g.a == g.p) {
    throw ComputationError("printed-formula-undefined",
                           "the printed closed form divides by a - p, which vanishes at " + g.str());
  }
  const auto [p, q, a] = g;
  const RatFunc lead = RatFunc(Rat(q - p, q + p)) * RatFunc::inverse_linear(a, p, 2);
  const RatFunc bracket = RatFunc::inverse_linear(1, 1) +
                          RatFunc(Rat((a * p - p * p - 1) * a)) * RatFunc::inverse_linear(a, p);
  return lead + RatFunc(Rat(2, (a - p) * (q + p))) * bracket;
}

RatFunc gpq_derived_closed_form(const GpqParams& g) {
  require_valid(g);
  const auto [p, q, a] = g;
  const RatFunc lead = RatFunc(Rat(q - p, q + p)) * RatFunc::inverse_linear(a, p, 2);
  const RatFunc s_over = RatFunc::make(Rat(1), Poly::monomial(Rat(1), 1), {{LinFactor{1, 1}, 1}});
  const RatFunc bracket = RatFunc(Rat(p, a)) - s_over;
  return lead + RatFunc(Rat(2, q + p)) * RatFunc::inverse_linear(a, p) * bracket;
}

CurveInput gpq_curve_input(const GpqParams& g) {
  require_valid(g);
  const std::string ps = std::to_string(g.p);
  const std::string qs = std::to_string(g.q);
  CurveInput c;
  for (const std::string& text : {"y^" + ps + "+x^" + qs, "y^" + qs + "+x^" + ps}) {
    c.branches.push_back({c.branches.empty() ? "g1" : "g2", Poly2::parse(text), text});
  }
  c.add_default_auxiliaries();
  return c;
}

ZetaReport gpq_full_resolution(const GpqParams& g, ResolveOptions opt) {
  const Resolution r = resolve(gpq_curve_input(g), opt);
  FormSpec w;
  if (g.a > 1) w.exponents = {{"x", g.a - 1}, {"y", g.a - 1}};
  ResGraph d = decorate(r.graph, r.table, w);
  d.set_label("gpq_full" + g.str());
  return zeta_ordinary(d);
}

}  // namespace zetatop
