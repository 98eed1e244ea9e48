#include "zetatop/exact/ratfunc.hpp"

#include <sstream>

#include "zetatop/error.hpp"
#include "zetatop/expr.hpp"

namespace zetatop {

LinFactor::Normalized LinFactor::normalize(std::int64_t nu, std::int64_t N) {
  if (nu == 0 && N == 0) throw ComputationError("zero-factor", "linear factor 0 + 0*s");
  if (N == 0) return {Rat(nu), std::nullopt};
  std::int64_t g = gcd64(nu, N);
  if (N < 0) g = -g;
  return {Rat(g), LinFactor{nu / g, N / g}};
}

std::string LinFactor::str() const {
  std::ostringstream os;
  os << '(' << nu << (N < 0 ? "-" : "+");
  const auto mag = N < 0 ? -N : N;
  if (mag != 1) os << mag << '*';
  os << "s)";
  return os.str();
}

RatFunc::RatFunc(const Rat& c) {
  if (!c.is_zero()) {
    scalar_ = c;
    num_ = Poly(Rat(1));
  }
}

RatFunc RatFunc::make(Rat scalar, Poly numerator, FactorMultiset denominator) {
  RatFunc r;
  if (scalar.is_zero() || numerator.is_zero()) return r;
  for (auto it = denominator.begin(); it != denominator.end();) {
    int& k = it->second;
    const Rat root = it->first.root();
    // Each cancelled copy of (nu + N*s) leaves a factor N in the scalar.
    while (k > 0 && numerator.degree() >= 1 && numerator(root).is_zero()) {
      numerator = numerator.divide_root(root);
      scalar /= Rat(it->first.N);
      --k;
    }
    it = k == 0 ? denominator.erase(it) : std::next(it);
  }
  auto [content, prim] = numerator.content_primitive();
  r.scalar_ = scalar * content;
  r.num_ = std::move(prim);
  r.den_ = std::move(denominator);
  return r;
}

RatFunc RatFunc::from_poly(const Poly& p) { return make(Rat(1), p, {}); }

RatFunc RatFunc::inverse_linear(std::int64_t nu, std::int64_t N, int k) {
  const auto n = LinFactor::normalize(nu, N);
  if (n.content.is_zero()) throw ComputationError("division-by-zero", "inverse of zero");
  RatFunc r;
  r.scalar_ = Rat(1) / zetatop::pow(n.content, k);
  r.num_ = Poly(Rat(1));
  if (n.factor && k > 0) r.den_[*n.factor] = k;
  return r;
}

int RatFunc::denominator_degree() const {
  int d = 0;
  for (const auto& [f, k] : den_) d += k;
  return d;
}

int RatFunc::pole_order(const Rat& s0) const {
  for (const auto& [f, k] : den_) {
    if (f.root() == s0) return k;
  }
  return 0;
}

Rat RatFunc::evaluate(const Rat& s) const {
  if (is_zero()) return Rat(0);
  Rat value = scalar_ * num_(s);
  for (const auto& [f, k] : den_) {
    const Rat d = f(s);
    if (d.is_zero()) {
      throw ComputationError("evaluation-at-pole", "evaluation at the pole " + s.str());
    }
    value /= zetatop::pow(d, k);
  }
  return value;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.scalar_ = -r.scalar_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  FactorMultiset common = den_;
  for (const auto& [f, k] : o.den_) {
    int& c = common[f];
    c = std::max(c, k);
  }
  auto lift = [&common](const RatFunc& x) {
    Poly p = x.num_ * x.scalar_;
    for (const auto& [f, k] : common) {
      const auto it = x.den_.find(f);
      const int have = it == x.den_.end() ? 0 : it->second;
      if (k > have) p *= f.poly().pow(static_cast<unsigned>(k - have));
    }
    return p;
  };
  Poly sum = lift(*this) + lift(o);
  return *this = make(Rat(1), std::move(sum), std::move(common));
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc{};
  FactorMultiset den = den_;
  for (const auto& [f, k] : o.den_) den[f] += k;
  return *this = make(scalar_ * o.scalar_, num_ * o.num_, std::move(den));
}

RatFunc RatFunc::pow(unsigned k) const {
  RatFunc r(Rat(1));
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ComputationError("division-by-zero", "inverse of the zero function");
  if (num_.degree() > 1) {
    throw ComputationError("nonlinear-divisor",
                           "divisor is not a product of linear factors: " + str());
  }
  RatFunc r;
  r.scalar_ = Rat(1) / scalar_;
  if (num_.degree() == 1) {
    // num_ is primitive with integer coefficients: nu + N*s, N > 0.
    const LinFactor f{num_.coeff(0).to_int64(), num_.coeff(1).to_int64()};
    r.den_[f] = 1;
  }
  Poly num(Rat(1));
  for (const auto& [f, k] : den_) num *= f.poly().pow(static_cast<unsigned>(k));
  auto [content, prim] = num.content_primitive();
  r.scalar_ *= content;
  r.num_ = std::move(prim);
  return r;
}

std::string RatFunc::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << scalar_ << " * (" << num_.str("s") << ')';
  if (!den_.empty()) {
    os << " / (";
    bool first = true;
    for (const auto& [f, k] : den_) {
      if (!first) os << " * ";
      first = false;
      os << f.str();
      if (k > 1) os << '^' << k;
    }
    os << ')';
  }
  return os.str();
}

namespace {

RatFunc eval(const expr::Node& n);

// Evaluates a divisor as a product of inverses so that linear factors never
// need to be recovered from an expanded product.
RatFunc eval_inverse(const expr::Node& n) {
  using Op = expr::Node::Op;
  switch (n.op) {
    case Op::mul:
      return eval_inverse(*n.lhs) * eval_inverse(*n.rhs);
    case Op::div:
      return eval_inverse(*n.lhs) * eval(*n.rhs);
    case Op::pow:
      return eval_inverse(*n.lhs).pow(n.exponent);
    case Op::neg:
      return -eval_inverse(*n.lhs);
    default:
      return eval(n).inverse();
  }
}

RatFunc eval(const expr::Node& n) {
  using Op = expr::Node::Op;
  switch (n.op) {
    case Op::number:
      return RatFunc(n.value);
    case Op::variable:
      return RatFunc::from_poly(Poly::linear(Rat(0), Rat(1)));
    case Op::add:
      return eval(*n.lhs) + eval(*n.rhs);
    case Op::sub:
      return eval(*n.lhs) - eval(*n.rhs);
    case Op::mul:
      return eval(*n.lhs) * eval(*n.rhs);
    case Op::div:
      return eval(*n.lhs) * eval_inverse(*n.rhs);
    case Op::pow:
      return eval(*n.lhs).pow(n.exponent);
    case Op::neg:
      return -eval(*n.lhs);
  }
  return {};
}

}  // namespace

RatFunc RatFunc::parse(std::string_view text) {
  const auto root = expr::parse(text, {"s"});
  return eval(*root);
}

}  // namespace zetatop
