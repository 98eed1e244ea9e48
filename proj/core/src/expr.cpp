#include "zetatop/expr.hpp"

#include <cctype>

#include "zetatop/error.hpp"

namespace zetatop::expr {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string, std::less<>>& vars)
      : text_(text), vars_(vars) {}

  NodePtr run() {
    auto n = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (std::isspace(c) != 0) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Returns the operator character at the cursor, mapping U+2212 to '-'.
  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) return '\0';
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") return '-';
    return text_[pos_];
  }

  void advance() { pos_ += text_.substr(pos_, 3) == "\xE2\x88\x92" ? 3 : 1; }

  static NodePtr binary(Node::Op op, NodePtr l, NodePtr r, std::size_t col) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    n->column = col;
    return n;
  }

  NodePtr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      const auto col = pos_;
      advance();
      auto rhs = parse_term();
      lhs = binary(c == '+' ? Node::Op::add : Node::Op::sub, lhs, rhs, col);
    }
  }

  bool starts_atom(char c) const {
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) != 0 ||
           std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  NodePtr parse_term() {
    auto lhs = parse_unary();
    for (;;) {
      const char c = peek();
      const auto col = pos_;
      if (c == '*' || c == '/') {
        advance();
        auto rhs = parse_unary();
        lhs = binary(c == '*' ? Node::Op::mul : Node::Op::div, lhs, rhs, col);
      } else if (c != '\0' && starts_atom(c)) {
        auto rhs = parse_power();
        lhs = binary(Node::Op::mul, lhs, rhs, col);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    const char c = peek();
    if (c == '+') {
      advance();
      return parse_unary();
    }
    if (c == '-') {
      const auto col = pos_;
      advance();
      auto n = std::make_shared<Node>();
      n->op = Node::Op::neg;
      n->lhs = parse_unary();
      n->column = col;
      return n;
    }
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_atom();
    if (peek() == '^') {
      const auto col = pos_;
      advance();
      skip_ws();
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
        ++pos_;
      }
      if (start == pos_) fail("expected a nonnegative integer exponent");
      if (pos_ - start > 6) fail("exponent too large");
      auto n = std::make_shared<Node>();
      n->op = Node::Op::pow;
      n->lhs = std::move(base);
      n->exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      n->column = col;
      return n;
    }
    return base;
  }

  NodePtr parse_atom() {
    const char c = peek();
    const auto col = pos_;
    if (c == '(') {
      advance();
      auto inner = parse_expr();
      if (peek() != ')') fail("expected ')'");
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
        ++pos_;
      }
      auto n = std::make_shared<Node>();
      n->op = Node::Op::number;
      n->value = Rat(Int(std::string(text_.substr(start, pos_ - start)), 10));
      n->column = col;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      const auto start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      // Single-letter variables may be juxtaposed ("xy").
      std::string name(text_.substr(start, pos_ - start));
      if (vars_.find(name) == vars_.end()) {
        pos_ = start + 1;
        name = std::string(1, c);
        if (vars_.find(name) == vars_.end()) {
          pos_ = start;
          fail("unknown variable '" + name + "'");
        }
      }
      auto n = std::make_shared<Node>();
      n->op = Node::Op::variable;
      n->name = std::move(name);
      n->column = col;
      return n;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::set<std::string, std::less<>>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse(std::string_view text, const std::set<std::string, std::less<>>& variables) {
  return Parser(text, variables).run();
}

}  // namespace zetatop::expr
