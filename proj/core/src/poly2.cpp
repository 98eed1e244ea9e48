#include "zetatop/poly2.hpp"

#include <sstream>

#include "zetatop/error.hpp"
#include "zetatop/expr.hpp"

namespace zetatop {

Poly2::Poly2(const Rat& c) {
  if (!c.is_zero()) t_.emplace(Exponent{0, 0}, c);
}

Poly2 Poly2::monomial(const Rat& c, int i, int j) {
  Poly2 p;
  p.add_term({i, j}, c);
  return p;
}

void Poly2::add_term(const Exponent& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Rat Poly2::coeff(int i, int j) const {
  const auto it = t_.find({i, j});
  return it == t_.end() ? Rat(0) : it->second;
}

int Poly2::order() const {
  int best = -1;
  for (const auto& [e, c] : t_) {
    const int d = e.first + e.second;
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int Poly2::degree_first() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e.first);
  return d;
}

int Poly2::degree_second() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e.second);
  return d;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  Poly2 r;
  for (const auto& [e1, c1] : t_) {
    for (const auto& [e2, c2] : o.t_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  }
  return *this = std::move(r);
}

Poly2 Poly2::pow(unsigned k) const {
  Poly2 r(Rat(1));
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

Poly2 Poly2::chart_u(int mult) const {
  Poly2 r;
  for (const auto& [e, c] : t_) r.add_term({e.first + e.second - mult, e.second}, c);
  return r;
}

Poly2 Poly2::chart_v(int mult) const {
  Poly2 r;
  for (const auto& [e, c] : t_) r.add_term({e.first, e.first + e.second - mult}, c);
  return r;
}

Poly2 Poly2::shift_second(const Rat& t) const {
  if (t.is_zero()) return *this;
  Poly2 r;
  for (const auto& [e, c] : t_) {
    const int j = e.second;
    // (v + t)^j = sum_k binom(j, k) t^(j-k) v^k
    Int binom = 1;
    for (int k = 0; k <= j; ++k) {
      if (k > 0) binom = binom * (j - k + 1) / k;
      r.add_term({e.first, k}, c * Rat(binom) * zetatop::pow(t, j - k));
    }
  }
  return r;
}

Poly Poly2::restrict_first_zero() const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(degree_second(), -1) + 1));
  for (const auto& [e, c] : t_) {
    if (e.first == 0) v[static_cast<std::size_t>(e.second)] += c;
  }
  return Poly(std::move(v));
}

Poly Poly2::restrict_second_zero() const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(degree_first(), -1) + 1));
  for (const auto& [e, c] : t_) {
    if (e.second == 0) v[static_cast<std::size_t>(e.first)] += c;
  }
  return Poly(std::move(v));
}

Poly Poly2::at_first(const Rat& x0) const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(degree_second(), -1) + 1));
  for (const auto& [e, c] : t_) v[static_cast<std::size_t>(e.second)] += c * zetatop::pow(x0, e.first);
  return Poly(std::move(v));
}

Poly Poly2::at_second(const Rat& y0) const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(degree_first(), -1) + 1));
  for (const auto& [e, c] : t_) v[static_cast<std::size_t>(e.first)] += c * zetatop::pow(y0, e.second);
  return Poly(std::move(v));
}

std::string Poly2::str(std::string_view first, std::string_view second) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (const auto& [e, c] : t_) {
    const Rat mag = abs(c);
    if (lead) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    lead = false;
    const bool unit = mag == Rat(1);
    bool wrote = false;
    if (!unit || (e.first == 0 && e.second == 0)) {
      os << mag;
      wrote = true;
    }
    auto var = [&](std::string_view name, int k) {
      if (k == 0) return;
      if (wrote) os << '*';
      os << name;
      if (k > 1) os << '^' << k;
      wrote = true;
    };
    var(first, e.first);
    var(second, e.second);
  }
  return os.str();
}

namespace {

Poly2 eval(const expr::Node& n) {
  using Op = expr::Node::Op;
  switch (n.op) {
    case Op::number:
      return Poly2(n.value);
    case Op::variable:
      return n.name == "x" ? Poly2::monomial(Rat(1), 1, 0) : Poly2::monomial(Rat(1), 0, 1);
    case Op::add:
      return eval(*n.lhs) + eval(*n.rhs);
    case Op::sub:
      return eval(*n.lhs) - eval(*n.rhs);
    case Op::mul:
      return eval(*n.lhs) * eval(*n.rhs);
    case Op::div: {
      const Poly2 d = eval(*n.rhs);
      if (d.order() != 0 || d.terms().size() != 1) {
        throw ParseError("division by a non-constant polynomial", 1, n.column + 1);
      }
      return eval(*n.lhs) * Poly2(Rat(1) / d.coeff(0, 0));
    }
    case Op::pow:
      return eval(*n.lhs).pow(n.exponent);
    case Op::neg:
      return -eval(*n.lhs);
  }
  return {};
}

Rat specialization(int i) {
  // 0, 1, -1, 2, -2, ...
  const int k = (i + 1) / 2;
  return Rat(i % 2 == 1 ? k : -k);
}

bool squarefree_along(const Poly2& f, bool first) {
  const int full = first ? f.degree_second() : f.degree_first();
  for (int i = 0; i < 64; ++i) {
    const Poly p = first ? f.at_first(specialization(i)) : f.at_second(specialization(i));
    if (p.degree() != full) continue;
    if (is_squarefree(p)) return true;
  }
  return false;
}

}  // namespace

Poly2 Poly2::parse(std::string_view text) { return eval(*expr::parse(text, {"x", "y"})); }

bool is_squarefree(const Poly2& f) {
  if (f.is_zero()) return false;
  return squarefree_along(f, true) && squarefree_along(f, false);
}

}  // namespace zetatop
