#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "flagoct/errors.hpp"
#include "flagoct/polynomial.hpp"
#include "flagoct/rational.hpp"

namespace flagoct {

/// Negative exponents are only meaningful for characters (Laurent monomials).
enum class ExpressionContext { polynomial, character };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, variable, negate, add, subtract, multiply, power };

  Kind kind;
  std::size_t position = 0;
  Rational number;       // Kind::number, always >= 0
  std::string name;      // Kind::variable
  long exponent = 0;     // Kind::power
  std::vector<ExprPtr> children;

  bool same_tree(const Expr& other) const;
};

inline constexpr long kMaxExponent = 256;

/// expr   := term (('+'|'-') term)*
/// term   := unary ('*' unary)*
/// unary  := '-' unary | factor
/// factor := atom ('^' ['-'] integer)?
/// atom   := integer ['/' positive-integer] | identifier | '(' expr ')'
ExprPtr parse_expression(std::string_view text, const std::vector<std::string>& variables,
                         ExpressionContext context = ExpressionContext::polynomial);

/// Fully parenthesized form; parsing it back yields the same tree.
std::string print_expression(const Expr& e);

/// Generic bottom-up evaluation. `Value` needs +, -, * and unary minus;
/// leaf(expr) builds numbers and variables, pow(value, n) handles powers.
template <class Value, class Leaf, class Pow>
Value fold_expression(const Expr& e, const Leaf& leaf, const Pow& pow) {
  switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::variable:
      return leaf(e);
    case Expr::Kind::negate:
      return -fold_expression<Value>(*e.children[0], leaf, pow);
    case Expr::Kind::add:
      return fold_expression<Value>(*e.children[0], leaf, pow) + fold_expression<Value>(*e.children[1], leaf, pow);
    case Expr::Kind::subtract:
      return fold_expression<Value>(*e.children[0], leaf, pow) - fold_expression<Value>(*e.children[1], leaf, pow);
    case Expr::Kind::multiply:
      return fold_expression<Value>(*e.children[0], leaf, pow) * fold_expression<Value>(*e.children[1], leaf, pow);
    case Expr::Kind::power:
      return pow(fold_expression<Value>(*e.children[0], leaf, pow), e.exponent);
  }
  throw PreconditionError("corrupt expression tree");
}

/// Evaluates in a polynomial ring; variable names resolve against the ring.
Polynomial to_polynomial(const Expr& e, const RingPtr& ring);

/// Parse with the ring's variables and evaluate.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace flagoct
