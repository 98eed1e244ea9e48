#include "zetatop/exact/poly.hpp"

#include <algorithm>
#include <sstream>

#include "zetatop/error.hpp"

namespace zetatop {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rat& constant, const Rat& slope) { return Poly({constant, slope}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::operator()(const Rat& s) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= s;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::pow(unsigned k) const {
  Poly result(Rat(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Poly Poly::divide_root(const Rat& root) const {
  if (c_.empty()) return {};
  // Synthetic division, highest degree first.
  std::vector<Rat> q(c_.size() - 1);
  Rat carry;
  for (std::size_t i = c_.size(); i-- > 0;) {
    carry = carry * root + c_[i];
    if (i > 0) q[i - 1] = carry;
  }
  if (!carry.is_zero()) {
    throw ComputationError("inexact-division", "polynomial does not vanish at " + root.str());
  }
  return Poly(std::move(q));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw ComputationError("division-by-zero", "polynomial division by zero");
  Poly rem = *this;
  if (rem.degree() < divisor.degree()) return {Poly{}, rem};
  std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1));
  const Rat lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    const Rat f = rem.leading() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < divisor.c_.size(); ++i) rem.c_[i + shift] -= f * divisor.c_[i];
    rem.trim();
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  Poly r = *this;
  const Rat inv = Rat(1) / leading();
  r *= inv;
  return r;
}

std::pair<Rat, Poly> Poly::content_primitive() const {
  if (c_.empty()) return {Rat(0), Poly{}};
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  if (leading().sign() < 0) content = -content;
  Poly prim = *this;
  prim *= Rat(1) / content;
  return {content, prim};
}

std::string Poly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    const Rat mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != Rat(1)) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p;
  const Poly g = gcd(p, p.derivative());
  return p.divmod(g).first;
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

int vanishing_order(const Poly& p, const Rat& root) {
  if (p.is_zero()) {
    throw ComputationError("zero-polynomial", "vanishing order of the zero polynomial");
  }
  int k = 0;
  Poly q = p;
  while (q(root).is_zero()) {
    q = q.divide_root(root);
    ++k;
  }
  return k;
}

namespace {

// Prime factorization by trial division; the inputs here are coefficient
// magnitudes of small tangent-cone polynomials.
std::vector<std::pair<Int, int>> factor_int(Int n) {
  std::vector<std::pair<Int, int>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> divs{1};
  for (const auto& [prime, e] : factor_int(n)) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
  if (p.is_zero()) {
    throw ComputationError("zero-polynomial", "rational roots of the zero polynomial");
  }
  RationalRoots out;
  Poly rest = p.content_primitive().second;

  auto strip = [&](const Rat& r) {
    int k = 0;
    while (rest.degree() >= 1 && rest(r).is_zero()) {
      rest = rest.divide_root(r);
      ++k;
    }
    if (k > 0) out.roots.emplace_back(r, k);
  };

  strip(Rat(0));
  // A perfect power c*(s - r)^k is the common case for a single branch.
  if (rest.degree() >= 1) {
    const auto n = static_cast<std::size_t>(rest.degree());
    strip(-rest.coeff(n - 1) / (Rat(static_cast<long>(n)) * rest.leading()));
  }
  if (rest.degree() >= 1) {
    rest = rest.content_primitive().second;
    const auto lead_divs = divisors(rest.leading().num());
    const auto const_divs = divisors(rest.coeff(0).num());
    for (const auto& a : const_divs) {
      for (const auto& b : lead_divs) {
        if (rest.degree() < 1) break;
        strip(Rat(a, b));
        strip(Rat(Int(-a), b));
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  out.cofactor = rest;
  return out;
}

}  // namespace zetatop
