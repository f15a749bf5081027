#include "flagoct/expression.hpp"

#include <algorithm>
#include <cctype>

namespace flagoct {

bool Expr::same_tree(const Expr& other) const {
  if (kind != other.kind || children.size() != other.children.size()) return false;
  switch (kind) {
    case Kind::number: if (number != other.number) return false; break;
    case Kind::variable: if (name != other.name) return false; break;
    case Kind::power: if (exponent != other.exponent) return false; break;
    default: break;
  }
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!children[i]->same_tree(*other.children[i])) return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables, ExpressionContext context)
      : text_(text), variables_(variables), context_(context) {}

  ExprPtr parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    ExprPtr e = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  static ExprPtr binary(Expr::Kind kind, std::size_t position, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->position = position;
    e->children = {std::move(lhs), std::move(rhs)};
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Expr::Kind::add, at, lhs, term());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::subtract, at, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = binary(Expr::Kind::multiply, at, lhs, unary());
    }
  }

  ExprPtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::negate;
      e->position = at;
      e->children = {unary()};
      return e;
    }
    return factor();
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      if (context_ != ExpressionContext::character)
        throw ParseError("negative exponent outside a character context", pos_);
      negative = true;
      ++pos_;
    }
    const std::size_t digit_pos = pos_;
    const std::string d = digits();
    if (d.empty()) throw ParseError("expected integer exponent", digit_pos);
    if (d.size() > 6 || std::stol(d) > kMaxExponent) throw ParseError("exponent too large", digit_pos);
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::power;
    e->position = at;
    e->exponent = negative ? -std::stol(d) : std::stol(d);
    e->children = {std::move(base)};
    return e;
  }

  ExprPtr atom() {
    skip_space();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer numerator(digits(), 10);
      Integer denominator = 1;
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        const std::string d = digits();
        if (d.empty()) throw ParseError("expected denominator", den_pos);
        denominator = Integer(d, 10);
        if (denominator == 0) throw ParseError("zero denominator", den_pos);
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::number;
      e->position = at;
      e->number = Rational(numerator, denominator);
      e->number.canonicalize();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(variables_.begin(), variables_.end(), name) == variables_.end())
        throw UnknownVariableError(name);
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::variable;
      e->position = at;
      e->name = std::move(name);
      return e;
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  ExpressionContext context_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text, const std::vector<std::string>& variables,
                         ExpressionContext context) {
  return Parser(text, variables, context).parse();
}

std::string print_expression(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number: return to_string(e.number);
    case Expr::Kind::variable: return e.name;
    case Expr::Kind::negate: return "(-" + print_expression(*e.children[0]) + ")";
    case Expr::Kind::add:
      return "(" + print_expression(*e.children[0]) + " + " + print_expression(*e.children[1]) + ")";
    case Expr::Kind::subtract:
      return "(" + print_expression(*e.children[0]) + " - " + print_expression(*e.children[1]) + ")";
    case Expr::Kind::multiply:
      return "(" + print_expression(*e.children[0]) + "*" + print_expression(*e.children[1]) + ")";
    case Expr::Kind::power:
      return "(" + print_expression(*e.children[0]) + "^" + std::to_string(e.exponent) + ")";
  }
  return {};
}

Polynomial to_polynomial(const Expr& e, const RingPtr& ring) {
  return fold_expression<Polynomial>(
      e,
      [&](const Expr& leaf) {
        if (leaf.kind == Expr::Kind::number) return Polynomial::constant(ring, leaf.number);
        return Polynomial::variable(ring, leaf.name);
      },
      [&](const Polynomial& base, long n) {
        if (n < 0) throw PreconditionError("negative exponent in a polynomial");
        return base.pow(static_cast<unsigned>(n));
      });
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return to_polynomial(*parse_expression(text, ring->names(), ExpressionContext::polynomial), ring);
}

}  // namespace flagoct
