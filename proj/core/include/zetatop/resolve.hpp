#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "zetatop/calculus.hpp"
#include "zetatop/graph.hpp"
#include "zetatop/poly2.hpp"

namespace zetatop {

struct CurveSpec {
  std::string id;
  Poly2 poly;
  std::string text;  // as written in the input
};

// Branches of f and auxiliary curves tracked for forms, all germs at the origin.
struct CurveInput {
  std::vector<CurveSpec> branches;
  std::vector<CurveSpec> auxiliaries;

  // Adds x and y as auxiliaries unless an identical curve is already present.
  void add_default_auxiliaries();
};

// {"branches": [{"id", "poly"}], "auxiliaries": [...]}; throws ParseError.
CurveInput parse_curve_input(std::string_view json_text);
std::string serialize_curve_input(const CurveInput& c);

// Non-empty, vanishing at the origin, each curve reduced and all curves
// pairwise coprime. Throws ValidationError (codes "bad-curve",
// "non-reduced-branch", "curves-not-coprime").
void require_valid(const CurveInput& c);

struct ResolveOptions {
  int budget = 64;
  // Processes pending centers in a pseudo-random order instead of FIFO.
  std::optional<std::uint64_t> shuffle_seed;
};

// Exceptional curve created by one blowup.
struct Divisor {
  std::string id;
  std::int64_t N = 0;
  std::int64_t k = 0;             // nu - 1
  std::vector<std::int64_t> m;    // per tracked curve (branches first)
  std::int64_t self_int = -1;     // updated as later centers on it are blown up
};

// A strict transform germ at a point, in the point's local coordinates (u, v).
struct LocalCurve {
  std::size_t curve = 0;
  Poly2 f;
};

// Infinitely near point: exceptional curves through it are the axes
// {u = 0} (on_u) and {v = 0} (on_v), -1 when absent.
struct NearPoint {
  std::vector<LocalCurve> curves;
  int on_u = -1;
  int on_v = -1;
  std::string where;
  std::vector<std::string> reasons;  // why it is not normal crossing
};

struct Incidence {
  int a = -1;                 // divisor
  int b = -1;                 // second divisor, or -1
  int curve = -1;             // curve index when b == -1
};

struct BlowupState {
  std::vector<CurveSpec> curves;
  std::size_t branch_count = 0;
  std::vector<Divisor> divisors;
  std::vector<NearPoint> pending;
  std::vector<Incidence> incidences;
  int blowups = 0;
  // Sum over blown-up centers of M (M - 1), M the multiplicity of f there.
  std::int64_t twice_delta = 0;
};

// Reason tags of a point: "singular", "triple-point", "tangency",
// "no-exceptional-divisor".
std::vector<std::string> point_defects(const NearPoint& p);

struct Offender {
  std::string where;
  std::vector<std::string> reasons;
};

// Empty iff the state is resolved.
std::vector<Offender> ncd_check(const BlowupState& s);

struct Resolution {
  ResGraph graph;
  MultTable table;
  int blowups = 0;
  std::int64_t milnor = 0;  // from delta invariants, independent of the graph
};

class BlowupEngine {
 public:
  // Validates the input; throws ValidationError.
  explicit BlowupEngine(const CurveInput& c, ResolveOptions opt = {});

  const BlowupState& state() const { return s_; }
  bool done() const { return s_.pending.empty(); }
  // Blows up one pending center. Throws ComputationError with code
  // "non-rational-center" or "budget-exceeded".
  void step();
  void run();

  // Requires done(). Asserts the pullback relation on the assembled graph
  // (InconsistencyError otherwise).
  Resolution result() const;

 private:
  std::size_t next_index();
  void settle(NearPoint p);

  BlowupState s_;
  ResolveOptions opt_;
  std::mt19937_64 rng_;
};

Resolution resolve(const CurveInput& c, ResolveOptions opt = {});

// 1 + sum over exceptional vertices of (-chi_open of f) * N; 0 for a graph
// without exceptional vertices.
std::int64_t milnor_from_resolution(const ResGraph& g);

}  // namespace zetatop
