#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "medial/polynomial.hpp"

namespace medial {

/// Syntax error in a polynomial expression; `position` is a 0-based byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Largest exponent accepted after '^'.
inline constexpr unsigned kMaxExponent = 1024;

namespace ast {

struct Node;
using NodePtr = std::unique_ptr<const Node>;

struct RationalLiteral {
  Rational value;
};
/// 1-based, as written ("x3" has index 3).
struct Variable {
  std::size_t index;
};
struct Add {
  NodePtr lhs, rhs;
};
struct Sub {
  NodePtr lhs, rhs;
};
struct Neg {
  NodePtr operand;
};
struct Mul {
  NodePtr lhs, rhs;
};
struct Pow {
  NodePtr base;
  unsigned exponent;
};

struct Node {
  std::variant<RationalLiteral, Variable, Add, Sub, Neg, Mul, Pow> value;
};

}  // namespace ast

/// Grammar (whitespace is insignificant):
///   expr     := term (('+' | '-') term)*
///   term     := '-'? factor ('*' factor)*
///   factor   := base ('^' natural)?
///   base     := rational | variable | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///   variable := 'x' positive-integer
/// Variable indices are checked against `arity`.
ast::NodePtr parse_expression(std::string_view text, std::size_t arity);

Polynomial to_polynomial(const ast::Node& node, std::size_t arity);

/// parse_expression followed by to_polynomial.
Polynomial parse(std::string_view text, std::size_t arity);

/// Canonical text: terms in graded-lexicographic descending order, e.g.
/// "9*x1*x2*x3 - 2/3*x1^2 + 3*x1*x2 + 1/9"; the zero polynomial is "0".
/// The output re-parses to an equal polynomial.
std::string format(const Polynomial& p);

}  // namespace medial
