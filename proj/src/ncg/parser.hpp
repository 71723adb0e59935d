#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/ncpoly.hpp"

namespace ncg {

enum class AstKind { literal, variable, sum, product, power, negate, scalar_mul };

/// Syntax tree of a one-variable noncommutative polynomial expression.
struct Ast {
  AstKind kind;
  std::optional<Element> literal{};  // literal
  double scalar = 0.0;             // scalar_mul
  std::size_t exponent = 0;        // power
  bool bare_real = false;          // literal written as a plain real number
  std::vector<Ast> children{};     // sum/product: operands; power/negate/scalar_mul: one child
};

/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" nat)?
///   atom   := "x" | literal | "(" expr ")" | "-" atom
/// Literals are reals, "i"/"j"/"k" (optionally scaled: "2.5j"), and
/// "[[a,b;c,d]]" matrices. A parenthesised sum of literals such as
/// "(1+2i-3j+4k)" folds to a single literal. Multiplication needs "*".
/// Errors carry the 0-based byte position.
Ast parse(std::string_view text, const Algebra& algebra);

NcPolynomial lower(const Ast& ast, const Algebra& algebra);

/// parse + lower.
NcPolynomial parse_polynomial(std::string_view text, const Algebra& algebra);

/// Constant expression (no "x") evaluated to an element.
Element parse_element(std::string_view text, const Algebra& algebra);

/// Text that parses back to an evaluation-equal polynomial.
std::string render(const Ast& ast);

}  // namespace ncg
