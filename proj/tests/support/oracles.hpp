#pragma once

// Reference computations that take a different route from the library code
// they check.

#include <vector>

#include "medial/polynomial.hpp"

namespace medial::testing {

/// k-fold product, no squaring.
inline Polynomial iterated_pow(const Polynomial& p, unsigned k) {
  Polynomial out = Polynomial::constant(p.arity(), Rational(1));
  for (unsigned i = 0; i < k; ++i) out = mul(out, p);
  return out;
}

/// P(x + y0) by composing with the linear polynomials x_i + y0_i.
inline Polynomial shift_by_substitution(const Polynomial& p, const Point& shift) {
  std::vector<Polynomial> args;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    args.push_back(add(Polynomial::variable(p.arity(), i),
                       Polynomial::constant(p.arity(), shift[i])));
  }
  return substitute(p, args);
}

/// Every exponent key has the expected length and no coefficient is zero.
inline bool audit(const Polynomial& p) { return p.is_canonical(); }

}  // namespace medial::testing
