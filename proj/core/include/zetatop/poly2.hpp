#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "zetatop/exact/poly.hpp"
#include "zetatop/exact/rat.hpp"

namespace zetatop {

// Sparse bivariate polynomial over the rationals. In a blowup chart the two
// variables are the local coordinates (u, v); on input they are (x, y).
class Poly2 {
 public:
  using Exponent = std::pair<int, int>;  // (deg in first, deg in second)

  Poly2() = default;
  Poly2(const Rat& c);  // NOLINT(google-explicit-constructor)
  static Poly2 monomial(const Rat& c, int i, int j);

  // Polynomial in x and y, e.g. "(x-2y^2)^2 + y^5". Throws ParseError.
  static Poly2 parse(std::string_view text);

  const std::map<Exponent, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rat coeff(int i, int j) const;

  // Lowest total degree of a term (multiplicity at the origin); -1 for zero.
  int order() const;
  int degree_first() const;
  int degree_second() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Poly2& b) { return a *= b; }
  friend bool operator==(const Poly2&, const Poly2&) = default;
  Poly2 pow(unsigned k) const;

  // Strict transforms in the two standard charts of the blowup of the origin:
  //   chart_u: (u, v) = (u1, u1*v1), divided by u1^mult
  //   chart_v: (u, v) = (u2*v2, v2), divided by v2^mult
  Poly2 chart_u(int mult) const;
  Poly2 chart_v(int mult) const;
  // F(u, v + t)
  Poly2 shift_second(const Rat& t) const;

  Poly restrict_first_zero() const;   // F(0, v)
  Poly restrict_second_zero() const;  // F(u, 0)
  Poly at_first(const Rat& x0) const;   // F(x0, v)
  Poly at_second(const Rat& y0) const;  // F(u, y0)

  std::string str(std::string_view first = "x", std::string_view second = "y") const;

 private:
  void add_term(const Exponent& e, const Rat& c);
  std::map<Exponent, Rat> t_;
};

// Tries specializations x = x0 and y = y0 with preserved degree: a repeated
// factor survives every such specialization, a squarefree polynomial fails
// only finitely many.
bool is_squarefree(const Poly2& f);

}  // namespace zetatop
