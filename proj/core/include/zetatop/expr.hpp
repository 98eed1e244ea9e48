#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zetatop/exact/rat.hpp"

// Infix expression grammar shared by polynomial (x, y) and rational-function
// (s) inputs:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary | implicit-factor)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | variable | '(' expr ')'
//
// Numbers are integers or decimals-free rationals written with '/'. A number
// directly followed by a variable or '(' multiplies ("2y^2", "57s").
namespace zetatop::expr {

struct Node {
  enum class Op { number, variable, add, sub, mul, div, pow, neg };

  Op op = Op::number;
  Rat value;           // number
  std::string name;    // variable
  unsigned exponent = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;  // unused by neg and pow
  std::size_t column = 0;
};

using NodePtr = std::shared_ptr<const Node>;

// Throws ParseError with a 1-based line and column.
NodePtr parse(std::string_view text, const std::set<std::string, std::less<>>& variables);

}  // namespace zetatop::expr
