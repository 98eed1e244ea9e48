#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetatop/exact/rat.hpp"

namespace zetatop {

// Dense univariate polynomial over the rationals; coeffs[i] multiplies s^i.
// The coefficient vector never carries trailing zeros, so the zero polynomial
// is the empty vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rat& c, std::size_t degree);
  // nu + N*s
  static Poly linear(const Rat& constant, const Rat& slope);

  const std::vector<Rat>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat operator()(const Rat& s) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const;
  Poly pow(unsigned k) const;

  // Divides by (s - root); the remainder must be zero.
  Poly divide_root(const Rat& root) const;
  // Quotient and remainder of Euclidean division; divisor nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly monic() const;

  // Positive content c and primitive integer polynomial q with *this = c*q
  // and q's leading coefficient positive.
  std::pair<Rat, Poly> content_primitive() const;

  // Ascending-degree rendering such as "70 + 1051*s - 3*s^2".
  std::string str(std::string_view var = "s") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

Poly gcd(Poly a, Poly b);
Poly squarefree_part(const Poly& p);
bool is_squarefree(const Poly& p);

// Largest k with (s - root)^k dividing p. Throws ComputationError on the zero
// polynomial.
int vanishing_order(const Poly& p, const Rat& root);

struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;  // root, multiplicity; ascending
  Poly cofactor;                            // part without rational roots
};

// Splits off every rational root with multiplicity; p nonzero.
RationalRoots rational_roots(const Poly& p);

}  // namespace zetatop
