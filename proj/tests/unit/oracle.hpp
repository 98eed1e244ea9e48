#pragma once

#include <map>
#include <ostream>
#include <string>

#include "zetatop/exact/rat.hpp"
#include "zetatop/exact/ratfunc.hpp"
#include "zetatop/graph.hpp"

namespace zetatop {

inline void PrintTo(const RatFunc& f, std::ostream* os) { *os << f.str(); }

}  // namespace zetatop

namespace oracle {

// Stratum sum evaluated pointwise at a rational s, counting incidences
// straight from the edge list. Only valid where no factor nu + N*s vanishes.
inline zetatop::Rat stratum_sum_at(const zetatop::ResGraph& g, const zetatop::Rat& s) {
  using zetatop::Rat;
  std::map<std::string, std::int64_t> incident;
  std::map<std::string, std::int64_t> qorders;
  for (const auto& e : g.edges()) {
    ++incident[e.a];
    ++incident[e.b];
  }
  for (const auto& q : g.qpoints()) {
    ++incident[q.vertex];
    qorders[q.vertex] += q.order;
  }
  auto factor = [&](const std::string& id) {
    const auto& v = g.vertex(id);
    return Rat(v.nu) + Rat(v.N) * s;
  };
  Rat sum;
  for (const auto& v : g.vertices()) {
    if (v.is_arrow()) continue;
    const Rat chi = Rat(2 - 2 * v.genus - incident[v.id] + qorders[v.id]);
    sum += chi / factor(v.id);
  }
  for (const auto& e : g.edges()) sum += Rat(e.order) / (factor(e.a) * factor(e.b));
  return sum;
}

}  // namespace oracle
