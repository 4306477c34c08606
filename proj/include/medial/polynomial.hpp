#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "medial/errors.hpp"
#include "medial/multi_index.hpp"
#include "medial/rational.hpp"

namespace medial {

/// Evaluation argument; its length must match the arity of the polynomial.
using Point = std::vector<Rational>;

/// A single term c * x^alpha.
struct Term {
  MultiIndex exponent;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in a fixed number of variables with exact rational
/// coefficients.
///
/// Values are immutable once built: every operation below returns a new
/// polynomial. The term map never holds a zero coefficient, so two
/// polynomials are equal exactly when their term maps are equal. Terms
/// iterate in graded-lexicographic descending order.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexGreater>;

  /// The zero polynomial in `arity` variables.
  explicit Polynomial(std::size_t arity);

  static Polynomial constant(std::size_t arity, const Rational& value);
  /// x_i (0-based index).
  static Polynomial variable(std::size_t arity, std::size_t i);
  static Polynomial monomial(const MultiIndex& exponent, const Rational& coefficient);
  /// Sums the given terms; repeated exponents accumulate, zeros are dropped.
  /// Every exponent must have length `arity`.
  static Polynomial from_terms(std::size_t arity, std::span<const Term> terms);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const MultiIndex& exponent) const;

  /// Audit hook: no stored zero coefficient and every key has length arity().
  bool is_canonical() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class PolynomialBuilder;

  std::size_t arity_;
  TermMap terms_;
};

/// Accumulates terms and yields a canonical polynomial.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(std::size_t arity) : arity_(arity) {}

  void add(const MultiIndex& exponent, const Rational& coefficient);
  void add(const Polynomial& p, const Rational& scale = Rational(1));
  Polynomial build() &&;

 private:
  std::size_t arity_;
  Polynomial::TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial subtract(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);
Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial mul(const Polynomial& p, const Polynomial& q);
/// Repeated squaring; pow(p, 0) is the constant 1.
Polynomial pow(const Polynomial& p, unsigned k);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return subtract(p, q); }
inline Polynomial operator-(const Polynomial& p) { return negate(p); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(const Rational& c, const Polynomial& p) { return scale(p, c); }

Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// The composition p(args[0], ..., args[n-1]); all args share one arity m
/// and the result is m-ary.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> args);

/// Formal derivative with respect to x_i (0-based).
Polynomial partial_derivative(const Polynomial& p, std::size_t i);

/// Replaces x_i by `value`; arity is kept and x_i no longer occurs.
Polynomial specialize(const Polynomial& p, std::size_t i, const Rational& value);

/// Total degree, or std::nullopt for the zero polynomial.
std::optional<unsigned> degree(const Polynomial& p);

/// Degree in the single variable x_i; 0 for the zero polynomial.
unsigned degree_in(const Polynomial& p, std::size_t i);

/// The single term when `p` has exactly one; the zero polynomial is not a monomial.
std::optional<Term> is_monomial(const Polynomial& p);

}  // namespace medial
