#pragma once

#include "medial/polynomial.hpp"

namespace medial::testing {

/// 9*x1*x2*x3 + 3*(x1*x2 + x2*x3 + x3*x1) + x1 + x2 + x3, built term by term.
inline Polynomial worked_example() {
  const std::vector<Term> terms{
      {{1, 1, 1}, Rational(9)}, {{1, 1, 0}, Rational(3)}, {{0, 1, 1}, Rational(3)},
      {{1, 0, 1}, Rational(3)}, {{1, 0, 0}, Rational(1)}, {{0, 1, 0}, Rational(1)},
      {{0, 0, 1}, Rational(1)},
  };
  return Polynomial::from_terms(3, terms);
}

inline Polynomial x(std::size_t arity, std::size_t i) { return Polynomial::variable(arity, i); }
inline Polynomial c(std::size_t arity, long value) {
  return Polynomial::constant(arity, Rational(value));
}
inline Polynomial c(std::size_t arity, const Rational& value) {
  return Polynomial::constant(arity, value);
}

}  // namespace medial::testing
