#include "zetatop/monodromy.hpp"

#include <sstream>

#include "zetatop/error.hpp"
#include "zetatop/resolve.hpp"

namespace zetatop {

CycProduct::CycProduct(const std::map<std::int64_t, std::int64_t>& factors) {
  for (const auto& [m, e] : factors) multiply(m, e);
}

void CycProduct::multiply(std::int64_t m, std::int64_t e) {
  if (m <= 0) throw ComputationError("bad-factor", "cyclotomic factor t^m - 1 needs m >= 1");
  if (e == 0) return;
  const std::int64_t v = (f_[m] += e);
  if (v == 0) f_.erase(m);
}

std::int64_t CycProduct::degree() const {
  std::int64_t d = 0;
  for (const auto& [m, e] : f_) d += m * e;
  return d;
}

std::int64_t CycProduct::root_multiplicity(std::int64_t d) const {
  std::int64_t k = 0;
  for (const auto& [m, e] : f_) {
    if (m % d == 0) k += e;
  }
  return k;
}

bool CycProduct::is_polynomial() const {
  for (const auto& [m, e] : f_) {
    for (std::int64_t d = 1; d * d <= m; ++d) {
      if (m % d != 0) continue;
      if (root_multiplicity(d) < 0 || root_multiplicity(m / d) < 0) return false;
    }
  }
  return true;
}

Poly CycProduct::expand() const {
  if (!is_polynomial()) throw ComputationError("not-a-polynomial", str() + " is not a polynomial");
  Poly num(Rat(1));
  Poly den(Rat(1));
  for (const auto& [m, e] : f_) {
    Poly factor = Poly::monomial(Rat(1), static_cast<std::size_t>(m)) - Poly(Rat(1));
    (e > 0 ? num : den) *= factor.pow(static_cast<unsigned>(e > 0 ? e : -e));
  }
  return num.divmod(den).first;
}

std::string CycProduct::str() const {
  if (f_.empty()) return "1";
  auto render = [](bool positive, const std::map<std::int64_t, std::int64_t>& f) {
    std::ostringstream os;
    bool first = true;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      const auto [m, e] = *it;
      if ((e > 0) != positive) continue;
      if (!first) os << ' ';
      first = false;
      os << "(t";
      if (m > 1) os << '^' << m;
      os << "-1)";
      const auto k = e > 0 ? e : -e;
      if (k > 1) os << '^' << k;
    }
    return os.str();
  };
  std::string num = render(true, f_);
  const std::string den = render(false, f_);
  if (num.empty()) num = "1";
  return den.empty() ? num : num + " / " + den;
}

CycProduct char_poly(const ResGraph& g) {
  CycProduct d;
  if (g.exceptional_count() == 0) return d;
  d.multiply(1, 1);
  for (const auto& v : g.vertices()) {
    if (v.kind != VertexKind::exceptional) continue;
    d.multiply(v.N, -chi_open_of_f(g, v.id));
  }
  if (!d.is_polynomial()) {
    throw InconsistencyError("negative-multiplicity",
                             "characteristic polynomial " + d.str() + " has a negative root multiplicity");
  }
  return d;
}

std::int64_t milnor(const ResGraph& g) {
  const std::int64_t deg = char_poly(g).degree();
  const std::int64_t mu = milnor_from_resolution(g);
  if (deg != mu) {
    throw InconsistencyError("milnor-mismatch", "degree of the characteristic polynomial is " +
                                                    std::to_string(deg) + " but the resolution gives " +
                                                    std::to_string(mu));
  }
  return mu;
}

EigenvalueQuery is_eigenvalue(const CycProduct& delta, const Rat& s0) {
  EigenvalueQuery q;
  q.order = s0.den().get_si();
  q.multiplicity = delta.root_multiplicity(q.order);
  q.is_eigenvalue = q.multiplicity > 0;
  return q;
}

EigenvalueQuery is_eigenvalue(const ResGraph& g, const Rat& s0) { return is_eigenvalue(char_poly(g), s0); }

CycProduct jordan_reference() { return CycProduct({{3, 1}, {6, 1}, {2, 2}, {1, -4}}); }

}  // namespace zetatop
