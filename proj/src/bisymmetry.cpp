#include "medial/bisymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "medial/analysis.hpp"
#include "medial/errors.hpp"

namespace medial {

SquareMatrix::SquareMatrix(std::size_t n, std::vector<Rational> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (entries_.size() != n_ * n_) throw std::invalid_argument("matrix entry count is not n*n");
}

Point SquareMatrix::row(std::size_t i) const {
  return Point(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
               entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

Point SquareMatrix::column(std::size_t j) const {
  Point out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back((*this)(i, j));
  return out;
}

std::pair<Rational, Rational> bisymmetry_sides(const Polynomial& p, const SquareMatrix& x) {
  const std::size_t n = p.arity();
  if (x.size() != n) throw ArityMismatch(n, x.size());
  Point rows;
  Point cols;
  rows.reserve(n);
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(evaluate(p, x.row(i)));
    cols.push_back(evaluate(p, x.column(i)));
  }
  return {evaluate(p, rows), evaluate(p, cols)};
}

bool verify_witness(const Polynomial& p, const NotBisymmetric& v) {
  const auto [lhs, rhs] = bisymmetry_sides(p, v.witness);
  return lhs == v.lhs && rhs == v.rhs && lhs != rhs;
}

namespace {

double binomial(double n, double k) {
  // C(n, k) via lgamma; only used as a (loose) cap in the projection
  return std::round(std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)));
}

// The n inner compositions P(r_i): one per row (or column), each in its own
// block of n variables of the n^2-ary ring.
std::vector<Polynomial> embedded_lines(const Polynomial& p, bool rows) {
  const std::size_t n = p.arity();
  const std::size_t big = n * n;
  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PolynomialBuilder b(big);
    for (const auto& [e, c] : p.terms()) {
      MultiIndex lifted(big);
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t pos = rows ? i * n + j : j * n + i;
        lifted[pos] = e[j];
      }
      b.add(lifted, c);
    }
    out.push_back(std::move(b).build());
  }
  return out;
}

// Integer values tried in order when specializing a variable of D.
Rational candidate_value(unsigned k) {
  // 1, 0, -1, 2, -2, 3, -3, ...
  if (k == 0) return Rational(1);
  if (k == 1) return Rational(0);
  return k % 2 == 0 ? Rational(-static_cast<long>(k / 2)) : Rational(static_cast<long>((k + 1) / 2));
}

NotBisymmetric extract_witness(const Polynomial& p, Polynomial difference) {
  const std::size_t n = p.arity();
  SquareMatrix x(n);
  for (std::size_t v = 0; v < n * n; ++v) {
    const unsigned limit = degree_in(difference, v) + 1;
    bool placed = false;
    for (unsigned k = 0; k < limit && !placed; ++k) {
      const Rational value = candidate_value(k);
      Polynomial reduced = specialize(difference, v, value);
      if (!reduced.is_zero()) {
        x(v / n, v % n) = value;
        difference = std::move(reduced);
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("witness extraction failed on a nonzero polynomial");
  }
  auto [lhs, rhs] = bisymmetry_sides(p, x);
  NotBisymmetric out{std::move(x), std::move(lhs), std::move(rhs)};
  if (!verify_witness(p, out)) throw std::logic_error("extracted witness does not verify");
  return out;
}

// Uniform integer in [-bound, bound] by rejection on the raw 64-bit output,
// so the stream is identical across standard library implementations.
long long sample_symmetric(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t range = 2 * bound + 1;
  // 2^64 mod range; values below it would bias the low residues
  const std::uint64_t threshold = (std::uint64_t{0} - range) % range;
  for (;;) {
    const std::uint64_t u = engine();
    if (u >= threshold) return static_cast<long long>(u % range) - static_cast<long long>(bound);
  }
}

std::optional<NotBisymmetric> randomized_search(const Polynomial& p, const RandomizedConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("randomized check needs at least one trial");
  if (cfg.bound == 0 || cfg.bound > (std::uint64_t{1} << 62)) {
    throw std::invalid_argument("randomized check bound must be in [1, 2^62]");
  }
  const std::size_t n = p.arity();
  std::mt19937_64 engine(cfg.seed);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    SquareMatrix x(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        x(i, j) = Rational(static_cast<long>(sample_symmetric(engine, cfg.bound)));
      }
    }
    auto [lhs, rhs] = bisymmetry_sides(p, x);
    if (lhs != rhs) return NotBisymmetric{std::move(x), std::move(lhs), std::move(rhs)};
  }
  return std::nullopt;
}

Polynomial univariate_body(const Polynomial& p, std::size_t index) {
  PolynomialBuilder b(1);
  for (const auto& [e, c] : p.terms()) b.add(MultiIndex{e[index]}, c);
  return std::move(b).build();
}

Affine affine_coefficients(const Polynomial& p) {
  Affine out{std::vector<Rational>(p.arity() + 1)};
  out.coefficients[0] = p.coefficient(MultiIndex(p.arity()));
  for (std::size_t i = 0; i < p.arity(); ++i) {
    out.coefficients[i + 1] = p.coefficient(MultiIndex::unit(p.arity(), i));
  }
  return out;
}

// Fast test for non-univariate P of degree p >= 2. Returns the class (iii)
// parameters when P is bisymmetric.
std::optional<ShiftedMonomial> shifted_monomial_test(const Polynomial& p, unsigned deg) {
  const auto top = is_monomial(homogeneous_component(p, deg));
  if (!top) return std::nullopt;
  const Point ones(p.arity(), Rational(1));
  const Rational b = evaluate(homogeneous_component(p, deg - 1), ones) /
                     (Rational(static_cast<long>(deg)) * top->coefficient);
  const Point back(p.arity(), -b);
  const Polynomial recentred =
      add(taylor_shift(p, back), Polynomial::constant(p.arity(), b));
  if (recentred != Polynomial::monomial(top->exponent, top->coefficient)) return std::nullopt;
  return ShiftedMonomial{top->coefficient, b, top->exponent};
}

}  // namespace

double projected_composition_terms(const Polynomial& p) {
  const std::size_t n = p.arity();
  const auto deg = degree(p);
  if (!deg) return 0.0;
  const double inner = static_cast<double>(p.term_count());
  double total = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double product = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      // P(r_i)^k has at most inner^k terms and at most C(n + k*deg, n) terms.
      const double by_products = std::pow(inner, static_cast<double>(e[i]));
      const double by_monomials =
          binomial(static_cast<double>(n + e[i] * *deg), static_cast<double>(n));
      product *= std::min(by_products, by_monomials);
    }
    total += product;
  }
  return 2.0 * total;
}

Polynomial bisymmetry_difference(const Polynomial& p, const SymbolicConfig& cfg) {
  const double projected = projected_composition_terms(p);
  if (projected > static_cast<double>(cfg.term_ceiling)) {
    throw ResourceExceeded(projected, cfg.term_ceiling);
  }
  const auto rows = embedded_lines(p, true);
  const auto cols = embedded_lines(p, false);
  return subtract(substitute(p, rows), substitute(p, cols));
}

Verdict check_symbolic(const Polynomial& p, const SymbolicConfig& cfg) {
  Polynomial difference = bisymmetry_difference(p, cfg);
  if (!difference.is_zero()) return extract_witness(p, std::move(difference));
  EscalationConfig escalation;
  escalation.symbolic = cfg;
  Verdict fast = classify(p, escalation);
  if (!is_bisymmetric(fast)) {
    throw InconsistentVerdict("symbolic oracle accepts but the classifier produced a witness");
  }
  return fast;
}

Verdict check_randomized(const Polynomial& p, const RandomizedConfig& cfg) {
  if (auto witness = randomized_search(p, cfg)) return *std::move(witness);
  // No witness in any trial: the label comes from the classifier. Should the
  // classifier reject, its verdict already carries a verified witness.
  return classify(p);
}

Verdict classify(const Polynomial& p, const EscalationConfig& cfg) {
  const auto essential = essential_variables(p);
  if (essential.size() == 1) {
    return Bisymmetric{Univariate{essential.front(), univariate_body(p, essential.front())}};
  }
  const auto deg = degree(p);
  if (!deg || *deg <= 1) return Bisymmetric{affine_coefficients(p)};

  if (auto shifted = shifted_monomial_test(p, *deg)) return Bisymmetric{*std::move(shifted)};

  if (auto witness = randomized_search(p, cfg.randomized)) return *std::move(witness);
  Polynomial difference = bisymmetry_difference(p, cfg.symbolic);
  if (difference.is_zero()) {
    throw InconsistentVerdict("classifier rejects a polynomial whose bisymmetry difference is zero");
  }
  return extract_witness(p, std::move(difference));
}

Polynomial construct_class_iii(const ClassIIISpec& spec) {
  if (spec.a.is_zero()) throw std::invalid_argument("class (iii) requires a != 0");
  if (spec.alpha.size() == 0) throw std::invalid_argument("class (iii) requires arity >= 1");
  if (spec.alpha.total() == 0) throw std::invalid_argument("class (iii) requires |alpha| >= 1");
  const std::size_t n = spec.alpha.size();
  Polynomial product = Polynomial::constant(n, spec.a);
  const Polynomial shift = Polynomial::constant(n, spec.b);
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.alpha[i] == 0) continue;
    product = mul(product, pow(add(Polynomial::variable(n, i), shift), spec.alpha[i]));
  }
  return subtract(product, shift);
}

std::vector<Rational> integrality_conditions(const ClassIIISpec& spec) {
  if (!spec.a.is_integer()) throw std::invalid_argument("integrality check requires an integer a");
  const auto d = static_cast<unsigned>(spec.alpha.total());
  std::vector<Rational> out;
  for (unsigned k = 1; k < d; ++k) out.push_back(spec.a * spec.b.pow(k));
  out.push_back(spec.a * spec.b.pow(d) - spec.b);
  return out;
}

bool integrality_check(const ClassIIISpec& spec) {
  const auto conditions = integrality_conditions(spec);
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const Rational& r) { return r.is_integer(); });
}

Polynomial label_polynomial(const ClassLabel& label, std::size_t arity) {
  struct Visitor {
    std::size_t arity;

    Polynomial operator()(const Univariate& u) const {
      PolynomialBuilder b(arity);
      for (const auto& [e, c] : u.body.terms()) {
        MultiIndex lifted(arity);
        lifted[u.index] = e[0];
        b.add(lifted, c);
      }
      return std::move(b).build();
    }
    Polynomial operator()(const Affine& a) const {
      if (a.coefficients.size() != arity + 1) throw ArityMismatch(arity + 1, a.coefficients.size());
      PolynomialBuilder b(arity);
      b.add(MultiIndex(arity), a.coefficients[0]);
      for (std::size_t i = 0; i < arity; ++i) {
        b.add(MultiIndex::unit(arity, i), a.coefficients[i + 1]);
      }
      return std::move(b).build();
    }
    Polynomial operator()(const ShiftedMonomial& s) const {
      if (s.alpha.size() != arity) throw ArityMismatch(arity, s.alpha.size());
      return construct_class_iii({s.a, s.b, s.alpha});
    }
  };
  return std::visit(Visitor{arity}, label);
}

}  // namespace medial
