#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetatop/exact/ratfunc.hpp"
#include "zetatop/graph.hpp"

namespace zetatop {

struct PoleRecord {
  Rat location;
  int order = 0;
  // Vertices whose factor nu + N*s vanishes at the pole, then edges ("a--b")
  // with both endpoint factors vanishing.
  std::vector<std::string> witnesses;

  friend bool operator==(const PoleRecord&, const PoleRecord&) = default;
};

struct ZetaReport {
  RatFunc value;
  std::vector<PoleRecord> poles;  // ascending by location
  Rat lct;

  std::vector<Rat> poles_of_order(int order) const;
  friend bool operator==(const ZetaReport&, const ZetaReport&) = default;
};

// Stratum sum over an ordinary graph:
//   sum_v chi_open(v) / (nu_v + N_v s) + sum_edges 1 / (L_a L_b).
// Throws ValidationError for invalid or non-ordinary graphs.
ZetaReport zeta_ordinary(const ResGraph& g);

// Q-resolution formula: vertex weights chi_open(v) + sum of qpoint orders on
// v, edge weights m_{a,b}. Agrees with zeta_ordinary on ordinary graphs.
ZetaReport zeta_q(const ResGraph& g);

// min nu/N over vertices with N >= 1 (arrows included).
Rat lct(const ResGraph& g);

// Builds the pole table of an already computed value, attributing witnesses
// from the graph decorations.
std::vector<PoleRecord> pole_table(const ResGraph& g, const RatFunc& value);

struct EdgeCandidate {
  std::string edge;  // "a--b"
  std::string a;
  std::string b;
  std::int64_t N_a = 0;
  std::int64_t N_b = 0;
  std::int64_t gcd = 0;
  // Reduced denominators d of a double pole -u/d this edge could carry:
  // exactly the divisors of gcd(N_a, N_b).
  std::vector<std::int64_t> admissible_denominators;
  // Whether the current decoration already makes nu_a/N_a = nu_b/N_b.
  bool active = false;
};

// One record per edge between exceptional vertices of an ordinary graph.
std::vector<EdgeCandidate> double_pole_candidates(const ResGraph& g);

// Pole orders read from Laurent coefficients term by term, independent of the
// cancellation in RatFunc. Used by bulk sweeps; agrees with zeta_q(g).poles.
struct PoleSummary {
  Rat location;
  int order = 0;
};
std::vector<PoleSummary> fast_poles(const ResGraph& g);

std::string render_text(const ZetaReport& r);
std::string render_json(const ZetaReport& r);

}  // namespace zetatop
