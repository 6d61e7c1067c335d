#pragma once

// Expression front-end:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/')? unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' int)? '\''*
//   atom   := name | number | '(' expr ')'
// Names: a as c cs B0 Bp Bm w+ w- wz q s.

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qaffine/calculus.hpp"

namespace qaffine {

struct Expr {
  enum class Kind { Number, Name, Sum, Difference, Product, Quotient, Power, Star, Neg };
  Kind kind = Kind::Number;
  std::string text;  // digits for Number, token for Name
  int exponent = 0;  // Power
  std::vector<std::shared_ptr<const Expr>> args;
  std::size_t offset = 0;
};
using ExprPtr = std::shared_ptr<const Expr>;

/// Throws ParseError with the byte offset of the offending token.
ExprPtr parseExpr(std::string_view text);
/// Canonical spacing, fully parenthesized where precedence requires it.
std::string printExpr(const Expr& e);

using Value = std::variant<AlgebraElement, OneForm>;
Value evaluate(const Expr& e);
std::string toString(const Value& v);

/// Parse and evaluate, requiring an algebra element (resp. one-form).
AlgebraElement parseAlgebra(std::string_view text);
OneForm parseForm(std::string_view text);

}  // namespace qaffine
