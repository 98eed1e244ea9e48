#include "zetatop/exact/rat.hpp"

#include <numeric>
#include <ostream>

#include "zetatop/error.hpp"

namespace zetatop {

namespace {

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
      continue;
    }
    if (text[i] != ' ' && text[i] != '\t') out += text[i];
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw ComputationError("division-by-zero", "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const std::string s = normalize_minus(text);
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
  }
  return Rat(Int(num, 10), Int(den, 10));
}

std::int64_t Rat::to_int64() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) {
    throw ComputationError("not-an-integer", "expected a machine integer, got " + str());
  }
  return v_.get_num().get_si();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ComputationError("division-by-zero", "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, int exponent) {
  if (exponent < 0) return Rat(1) / pow(base, -exponent);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace zetatop
