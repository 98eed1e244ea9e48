#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "zetatop/exact/poly.hpp"
#include "zetatop/exact/rat.hpp"

namespace zetatop {

// Primitive linear form nu + N*s with gcd(nu, N) = 1 and N > 0.
struct LinFactor {
  std::int64_t nu = 1;
  std::int64_t N = 1;

  struct Normalized;
  // Splits nu + N*s into content * primitive factor. (0, 0) is rejected.
  static Normalized normalize(std::int64_t nu, std::int64_t N);

  Rat root() const { return Rat(-nu, N); }
  Rat operator()(const Rat& s) const { return Rat(nu) + Rat(N) * s; }
  Poly poly() const { return Poly::linear(Rat(nu), Rat(N)); }
  std::string str() const;

  friend bool operator==(const LinFactor&, const LinFactor&) = default;
  // Sorted by (N, nu).
  friend std::strong_ordering operator<=>(const LinFactor& a, const LinFactor& b) {
    if (auto c = a.N <=> b.N; c != 0) return c;
    return a.nu <=> b.nu;
  }
};

struct LinFactor::Normalized {
  Rat content;                      // scalar pulled out of nu + N*s
  std::optional<LinFactor> factor;  // empty when N == 0
};

using FactorMultiset = std::map<LinFactor, int>;

// Univariate rational function scalar * numerator / prod(factor^k).
// Canonical form: numerator primitive with integer coefficients and positive
// leading coefficient, no numerator root shared with a denominator factor.
// Zero is scalar 0 with empty numerator and denominator.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Rat& c);  // NOLINT(google-explicit-constructor)

  static RatFunc make(Rat scalar, Poly numerator, FactorMultiset denominator);
  static RatFunc from_poly(const Poly& p);
  // 1 / (nu + N*s)^k
  static RatFunc inverse_linear(std::int64_t nu, std::int64_t N, int k = 1);

  const Rat& scalar() const { return scalar_; }
  const Poly& numerator() const { return num_; }
  const FactorMultiset& denominator() const { return den_; }

  bool is_zero() const { return scalar_.is_zero(); }
  int denominator_degree() const;
  // Multiplicity of root -nu/N in the reduced denominator.
  int pole_order(const Rat& s0) const;

  Rat evaluate(const Rat& s) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc pow(unsigned k) const;
  // Inverse of a function whose numerator has degree <= 1; throws otherwise.
  RatFunc inverse() const;

  // "scalar * (numerator) / ((nu1+N1*s)^k1 * ...)", factors sorted by (N, nu).
  std::string str() const;
  // Reads the canonical rendering and, more generally, any expression in s
  // whose divisors are products of linear forms.
  static RatFunc parse(std::string_view text);

 private:
  Rat scalar_;
  Poly num_;
  FactorMultiset den_;
};

}  // namespace zetatop
