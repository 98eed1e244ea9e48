#pragma once

#include <cstdint>
#include <string>

#include "zetatop/exact/ratfunc.hpp"
#include "zetatop/graph.hpp"
#include "zetatop/resolve.hpp"
#include "zetatop/zeta.hpp"

namespace zetatop {

// g_{p,q} = (y^p + x^q)(y^q + x^p) with the form (xy)^{a-1} dxdy.
struct GpqParams {
  std::int64_t p = 2;
  std::int64_t q = 3;
  std::int64_t a = 1;

  std::string str() const;
  friend bool operator==(const GpqParams&, const GpqParams&) = default;
};

// 1 < p < q, gcd(p, q) = 1, a >= 1; throws ValidationError.
void require_valid(const GpqParams& g);

// Two exceptional vertices (N, nu) = (p(p+q), a(p+q)) joined by an edge of
// order q^2 - p^2; each carries a branch arrow on an order-1 edge and a form
// arrow (0, a) on an order-p edge.
ResGraph build_gpq_qgraph(const GpqParams& g);

// The printed closed form
//   (q-p)/(q+p) / (a+ps)^2 + 2/((a-p)(q+p)) * (1/(1+s) + (ap-p^2-1) a/(a+ps)).
// Throws ComputationError "printed-formula-undefined" at a = p.
RatFunc gpq_printed_closed_form(const GpqParams& g);

// Stratum sum of the Q-graph in closed form:
//   (q-p)/((q+p)(a+ps)^2) + 2/((q+p)(a+ps)) * (p/a - s/(1+s)).
RatFunc gpq_derived_closed_form(const GpqParams& g);

// Branches y^p + x^q and y^q + x^p with auxiliaries x and y.
CurveInput gpq_curve_input(const GpqParams& g);

// Resolves g_{p,q} with x and y tracked, decorates with c_x = c_y = a - 1 and
// evaluates the ordinary stratum sum.
ZetaReport gpq_full_resolution(const GpqParams& g, ResolveOptions opt = {});

}  // namespace zetatop
