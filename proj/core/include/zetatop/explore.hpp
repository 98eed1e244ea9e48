#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zetatop/calculus.hpp"
#include "zetatop/graph.hpp"
#include "zetatop/monodromy.hpp"
#include "zetatop/zeta.hpp"

namespace zetatop {

struct ExponentRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const ExponentRange&, const ExponentRange&) = default;
};

// Exponent vectors c with lo <= c_g <= hi for every listed curve; curves not
// listed have exponent 0.
struct SearchBox {
  std::vector<std::string> curves;
  std::map<std::string, ExponentRange> bounds;
  std::optional<std::set<Rat>> target;

  std::uint64_t size() const;
  FormSpec form_at(std::uint64_t index) const;
};

inline constexpr std::int64_t kDefaultBound = 6;
inline constexpr std::uint64_t kDefaultFormCap = 1'000'000;

// "x:0..3,y:2" style list; "default" means 0..6 for every curve of the table,
// "" or "none" the empty box. Throws ValidationError.
SearchBox parse_bounds(std::string_view spec, const MultTable& t);
// Comma-separated rationals such as "-2/3,-3/2".
std::set<Rat> parse_targets(std::string_view spec);

struct SweepOptions {
  int jobs = 1;
  std::size_t max_hits = 100;
  std::uint64_t max_forms = kDefaultFormCap;
  // Exceptional vertex treated as the root; defaults to the smallest N.
  std::optional<std::string> root;
};

struct Hit {
  std::uint64_t index = 0;
  FormSpec form;
  ZetaReport report;
};

// Forms sharing one set of double poles.
struct DoublePoleClass {
  std::vector<Rat> poles;
  std::uint64_t count = 0;
  std::uint64_t first_index = 0;
  FormSpec first;
};

// Structural statement about one exceptional edge: a double pole on it has
// reduced denominator dividing gcd(N_a, N_b).
struct Certificate {
  std::string edge;
  std::string side;  // neighbour of the root heading the subtree, or "root"
  std::int64_t N_a = 0;
  std::int64_t N_b = 0;
  std::int64_t gcd = 0;
  std::vector<std::int64_t> admissible_denominators;

  bool excludes(std::int64_t denominator) const { return gcd % denominator != 0; }
  std::string str() const;
};

// Box-independent: derived from double_pole_candidates only.
std::vector<Certificate> gcd_certificates(const ResGraph& g, const std::optional<std::string>& root = {});

struct SearchResult {
  std::uint64_t forms = 0;
  std::uint64_t inadmissible = 0;
  std::uint64_t target_matches = 0;            // forms qualifying as hits
  std::vector<Hit> hits;                       // ascending index
  std::vector<DoublePoleClass> classes;        // ascending by pole set
  std::uint64_t non_eigenvalue_count = 0;      // forms with a pole that is no eigenvalue
  std::vector<FormSpec> non_eigenvalue_forms;  // first max_hits of them
  std::set<std::int64_t> pole_orders;          // d of exp(2 pi i s0) over all poles
  std::uint64_t root_double_forms = 0;         // double pole witnessed by the root
  std::uint64_t root_double_with_second = 0;   // ... together with another double pole
  std::vector<Certificate> certificates;
};

// Enumerates every form of the box, computes pole orders and aggregates.
// Hits are forms whose double-pole set contains the target, or has at least
// one double pole when no target is set; each hit is recomputed with
// zeta_ordinary on the decorated graph (InconsistencyError on disagreement).
// Throws ValidationError when the box is larger than max_forms or names a
// curve missing from the table.
SearchResult sweep(const ResGraph& g, const MultTable& t, const SearchBox& box, const SweepOptions& opt = {});

struct RemarkReport {
  std::uint64_t forms = 0;
  std::uint64_t both_targets = 0;  // forms with -2/3 and -3/2 both double
  std::optional<FormSpec> both_example;
  std::uint64_t root_double_forms = 0;
  std::uint64_t root_double_with_second = 0;
  std::vector<Certificate> certificates;
  // Sides on which no edge admits denominator 3.
  std::vector<std::string> sides_excluding_3;
  bool no_pair = false;           // (a)
  bool certificate_holds = false; // (b): some non-root side excludes 3 entirely
  bool root_isolated = false;     // (c)
};

RemarkReport verify_remark(const ResGraph& g, const MultTable& t, const SearchBox& box,
                           const SweepOptions& opt = {});

struct CoverageReport {
  std::map<std::int64_t, std::int64_t> eigen_orders;  // d -> multiplicity > 0
  std::set<std::int64_t> covered;
  std::set<std::int64_t> uncovered;
  std::set<std::int64_t> non_eigen_pole_orders;
};

CoverageReport eigenvalue_coverage(const ResGraph& g, const MultTable& t, const SearchBox& box,
                                   const SweepOptions& opt = {});

std::string render_text(const SearchResult& r);
std::string render_json(const SearchResult& r);
std::string render_text(const RemarkReport& r);
std::string render_json(const RemarkReport& r);
std::string render_text(const CoverageReport& r);
std::string render_json(const CoverageReport& r);

}  // namespace zetatop
