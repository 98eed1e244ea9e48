#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zetatop {

using Int = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;

  template <std::integral T>
  Rat(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rat(const Int& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  template <std::integral A, std::integral B>
  Rat(A num, B den) : Rat(Int(static_cast<long>(num)), Int(static_cast<long>(den))) {}

  // Accepts "a" or "a/b" with optional sign.
  static Rat parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  // Requires is_integer() and a value that fits in int64.
  std::int64_t to_int64() const;

  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Rat abs(const Rat& r);
Rat pow(const Rat& base, int exponent);
std::ostream& operator<<(std::ostream& os, const Rat& r);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace zetatop

template <>
struct std::hash<zetatop::Rat> {
  std::size_t operator()(const zetatop::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
