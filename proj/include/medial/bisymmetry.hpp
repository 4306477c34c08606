#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "medial/multi_index.hpp"
#include "medial/polynomial.hpp"
#include "medial/rational.hpp"

namespace medial {

/// Dense n x n matrix of rationals, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  SquareMatrix(std::size_t n, std::vector<Rational> row_major);

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  Point row(std::size_t i) const;
  Point column(std::size_t j) const;
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

/// Class (i): at most one essential variable. `body` is the 1-ary polynomial
/// in that variable.
struct Univariate {
  std::size_t index;
  Polynomial body;

  friend bool operator==(const Univariate&, const Univariate&) = default;
};

/// Class (ii): a0 + sum a_i x_i, stored as {a0, a1, ..., an}.
struct Affine {
  std::vector<Rational> coefficients;

  friend bool operator==(const Affine&, const Affine&) = default;
};

/// Class (iii): a * prod (x_i + b)^alpha_i - b.
struct ShiftedMonomial {
  Rational a;
  Rational b;
  MultiIndex alpha;

  friend bool operator==(const ShiftedMonomial&, const ShiftedMonomial&) = default;
};

using ClassLabel = std::variant<Univariate, Affine, ShiftedMonomial>;

struct Bisymmetric {
  ClassLabel label;

  friend bool operator==(const Bisymmetric&, const Bisymmetric&) = default;
};

/// Certificate of failure: P(P(rows)) = lhs differs from P(P(columns)) = rhs.
struct NotBisymmetric {
  SquareMatrix witness;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const NotBisymmetric&, const NotBisymmetric&) = default;
};

using Verdict = std::variant<Bisymmetric, NotBisymmetric>;

inline bool is_bisymmetric(const Verdict& v) { return std::holds_alternative<Bisymmetric>(v); }

struct ClassIIISpec {
  Rational a;
  Rational b;
  MultiIndex alpha;
};

struct RandomizedConfig {
  std::uint64_t trials = 16;
  /// Samples are integers drawn uniformly from [-bound, bound].
  std::uint64_t bound = 1'000'000;
  std::uint64_t seed = 0;
};

struct SymbolicConfig {
  /// Ceiling on the projected number of terms of the composed polynomials.
  std::size_t term_ceiling = 5'000'000;
};

/// Used by classify() to produce a witness when the fast test rejects.
struct EscalationConfig {
  RandomizedConfig randomized;
  SymbolicConfig symbolic;
};

/// Both sides of the bisymmetry identity at a concrete matrix:
/// {P(P(r_1), ..., P(r_n)), P(P(c_1), ..., P(c_n))}.
std::pair<Rational, Rational> bisymmetry_sides(const Polynomial& p, const SquareMatrix& x);

/// Re-evaluates both sides at the witness and checks they match the
/// recorded values and differ.
bool verify_witness(const Polynomial& p, const NotBisymmetric& v);

/// Upper bound on the number of terms produced while composing P with itself
/// along rows or columns (summed over both sides).
double projected_composition_terms(const Polynomial& p);

/// D = P(P(r_1), ..., P(r_n)) - P(P(c_1), ..., P(c_n)) as an n^2-ary polynomial;
/// x_ij sits at position i*n + j (0-based). Throws ResourceExceeded when
/// projected_composition_terms(p) exceeds the ceiling.
Polynomial bisymmetry_difference(const Polynomial& p, const SymbolicConfig& cfg = {});

/// Exact decision by symbolic expansion. Bisymmetric verdicts carry the
/// classify() label; failures carry a deterministic witness found by
/// specializing D one variable at a time.
Verdict check_symbolic(const Polynomial& p, const SymbolicConfig& cfg = {});

/// One-sided randomized test: NotBisymmetric verdicts are certified, a
/// Bisymmetric verdict may be wrong with probability at most
/// (deg D / (2*bound + 1))^trials. Deterministic given the seed.
Verdict check_randomized(const Polynomial& p, const RandomizedConfig& cfg = {});

/// Fast decision procedure based on the top two homogeneous components.
Verdict classify(const Polynomial& p, const EscalationConfig& cfg = {});

/// Expanded a * prod (x_i + b)^alpha_i - b. Requires a != 0 and |alpha| >= 1.
Polynomial construct_class_iii(const ClassIIISpec& spec);

/// The quantities that must be integers for the construction to have integer
/// coefficients: a*b^k for k = 1..|alpha|-1, then a*b^|alpha| - b.
/// Requires an integer a.
std::vector<Rational> integrality_conditions(const ClassIIISpec& spec);

bool integrality_check(const ClassIIISpec& spec);

/// The polynomial described by a label, in `arity` variables.
Polynomial label_polynomial(const ClassLabel& label, std::size_t arity);

}  // namespace medial
