#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetatop/graph.hpp"

namespace zetatop {

// Local intersection of a curve's strict transform with an exceptional vertex.
struct Attachment {
  std::string vertex;
  std::int64_t count = 1;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct CurveMultiplicities {
  std::map<std::string, std::int64_t> m;  // exceptional vertex -> multiplicity
  std::vector<Attachment> attachment;
  friend bool operator==(const CurveMultiplicities&, const CurveMultiplicities&) = default;
};

// Multiplicity data that turns a monomial-in-curves form into nu-decorations.
struct MultTable {
  std::map<std::string, std::int64_t> canonical;  // k_i = nu_i(dxdy) - 1
  std::map<std::string, CurveMultiplicities> curves;
  friend bool operator==(const MultTable&, const MultTable&) = default;
};

// omega = prod g^{c_g} dxdy; absent curves have exponent 0.
struct FormSpec {
  std::map<std::string, std::int64_t> exponents;

  bool is_standard() const;
  std::int64_t exponent(std::string_view curve) const;
  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

// E_i^2 = -(sum of N over neighbours, arrows included) / N_i for every
// exceptional vertex. Throws InconsistencyError when a quotient is not a
// negative integer.
std::map<std::string, std::int64_t> self_intersections(const ResGraph& g);

// Solves sum_j k_j E_j.E_i = -E_i^2 - 2 + 2 g_i and returns nu = k + 1.
std::map<std::string, std::int64_t> canonical_nu(
    const ResGraph& g, const std::map<std::string, std::int64_t>& self_int);

// Solves M m + a = 0 for the pullback multiplicities of an auxiliary curve.
std::map<std::string, std::int64_t> curve_multiplicities(
    const ResGraph& g, const std::vector<Attachment>& attachment);

// Canonical k from the graph itself and m-vectors from attachments.
MultTable derive_multtable(const ResGraph& g,
                           const std::map<std::string, std::vector<Attachment>>& attachments);

// Admissibility violations for decorating g with w: missing curves,
// non-transversal attachments, new branching vertices.
std::vector<std::string> admissibility_violations(const ResGraph& g, const MultTable& t,
                                                  const FormSpec& w);

// nu_i = 1 + k_i + sum_g c_g m_i(g) on exceptional vertices and one form arrow
// (0, 1 + c_g) per attachment point of every curve with c_g > 0. Existing form
// arrows of g are replaced.
ResGraph decorate(const ResGraph& g, const MultTable& t, const FormSpec& w);

MultTable parse_multtable(std::string_view json_text);
std::string serialize_multtable(const MultTable& t);
// Completes a partially specified table (attachments only) against a graph.
MultTable complete_multtable(const ResGraph& g, MultTable t);

FormSpec parse_formspec(std::string_view json_text);
std::string serialize_formspec(const FormSpec& w);

}  // namespace zetatop
