#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "zetatop/exact/poly.hpp"
#include "zetatop/exact/rat.hpp"
#include "zetatop/graph.hpp"

namespace zetatop {

// prod_m (t^m - 1)^{e_m}, kept unexpanded. Zero exponents are never stored.
class CycProduct {
 public:
  CycProduct() = default;
  explicit CycProduct(const std::map<std::int64_t, std::int64_t>& factors);

  const std::map<std::int64_t, std::int64_t>& factors() const { return f_; }
  void multiply(std::int64_t m, std::int64_t e);

  std::int64_t degree() const;
  // Multiplicity of a primitive d-th root of unity: sum of e_m over d | m.
  std::int64_t root_multiplicity(std::int64_t d) const;
  // Every root multiplicity is nonnegative, i.e. the product is a polynomial.
  bool is_polynomial() const;
  // Expands a polynomial product; throws ComputationError for non-polynomials.
  Poly expand() const;

  // "(t^57-1)^2 (t^38-1)^3 (t^18-1)^3 (t-1) / (t^19-1)^5", m descending.
  std::string str() const;

  friend bool operator==(const CycProduct&, const CycProduct&) = default;

 private:
  std::map<std::int64_t, std::int64_t> f_;
};

// Delta(t) = (t - 1) prod_i (t^{N_i} - 1)^{-chi_i} over exceptional vertices,
// chi_i the Euler characteristic of the open stratum of f. A graph without
// exceptional vertices (smooth germ) gives 1. Throws InconsistencyError when
// the result has a negative root multiplicity.
CycProduct char_poly(const ResGraph& g);

// Degree of char_poly; throws InconsistencyError when it disagrees with
// milnor_from_resolution.
std::int64_t milnor(const ResGraph& g);

struct EigenvalueQuery {
  bool is_eigenvalue = false;
  std::int64_t multiplicity = 0;
  std::int64_t order = 1;  // d with exp(2 pi i s0) a primitive d-th root
};

EigenvalueQuery is_eigenvalue(const CycProduct& delta, const Rat& s0);
EigenvalueQuery is_eigenvalue(const ResGraph& g, const Rat& s0);

// Polynomial whose roots carry the size-2 Jordan blocks of f_{a,b}, stored as
// reference data: (t^3-1)(t^6-1)(t^2-1)^2 / (t-1)^4, 9 blocks.
CycProduct jordan_reference();
inline constexpr int kJordanReferenceBlocks = 9;

}  // namespace zetatop
