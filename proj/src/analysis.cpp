#include "medial/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace medial {

Polynomial HomogeneousDecomposition::sum() const {
  PolynomialBuilder b(arity);
  for (const auto& [k, component] : components) b.add(component);
  return std::move(b).build();
}

Polynomial homogeneous_component(const Polynomial& p, unsigned k) {
  PolynomialBuilder b(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e.total() == k) b.add(e, c);
  }
  return std::move(b).build();
}

HomogeneousDecomposition decompose(const Polynomial& p) {
  std::map<unsigned, PolynomialBuilder> builders;
  for (const auto& [e, c] : p.terms()) {
    const auto k = static_cast<unsigned>(e.total());
    builders.try_emplace(k, p.arity()).first->second.add(e, c);
  }
  HomogeneousDecomposition out{p.arity(), {}};
  for (auto& [k, b] : builders) out.components.emplace(k, std::move(b).build());
  return out;
}

bool is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  const auto k = p.terms().begin()->first.total();
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [k](const auto& kv) { return kv.first.total() == k; });
}

namespace {

// Walks alpha one variable at a time. `derived` is d^alpha P restricted to the
// variables fixed so far, `weight` is y^alpha / alpha! for the same prefix.
void accumulate_taylor(const Polynomial& derived, const Rational& weight, std::size_t var,
                       std::span<const Rational> shift, PolynomialBuilder& out) {
  if (derived.is_zero()) return;
  if (var == derived.arity()) {
    out.add(derived, weight);
    return;
  }
  Polynomial current = derived;
  Rational w = weight;
  for (unsigned k = 0;; ++k) {
    accumulate_taylor(current, w, var + 1, shift, out);
    if (shift[var].is_zero()) break;
    current = partial_derivative(current, var);
    if (current.is_zero()) break;
    w = w * shift[var] / Rational(static_cast<long>(k + 1));
  }
}

}  // namespace

Polynomial taylor_shift(const Polynomial& p, std::span<const Rational> shift) {
  if (shift.size() != p.arity()) throw ArityMismatch(p.arity(), shift.size());
  PolynomialBuilder out(p.arity());
  accumulate_taylor(p, Rational(1), 0, shift, out);
  return std::move(out).build();
}

Polynomial conjugate_translate(const Polynomial& p, const Rational& b) {
  const Point shift(p.arity(), b);
  return subtract(taylor_shift(p, shift), Polynomial::constant(p.arity(), b));
}

Polynomial permute(const Polynomial& p, std::span<const std::size_t> sigma) {
  const std::size_t n = p.arity();
  if (sigma.size() != n) throw std::invalid_argument("permutation length does not match arity");
  std::vector<bool> seen(n, false);
  for (std::size_t s : sigma) {
    if (s >= n || seen[s]) throw std::invalid_argument("not a permutation");
    seen[s] = true;
  }
  PolynomialBuilder b(n);
  for (const auto& [e, c] : p.terms()) {
    MultiIndex moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[sigma[i]] = e[i];
    b.add(moved, c);
  }
  return std::move(b).build();
}

Polynomial identify(const Polynomial& p, std::size_t i, std::size_t j) {
  const std::size_t n = p.arity();
  if (n < 2) throw std::invalid_argument("identify requires arity >= 2");
  if (!(i < j && j < n)) throw std::invalid_argument("identify requires i < j < arity");
  PolynomialBuilder b(n - 1);
  for (const auto& [e, c] : p.terms()) {
    MultiIndex reduced(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
      if (k < j) {
        reduced[k] += e[k];
      } else if (k == j) {
        reduced[i] += e[k];
      } else {
        reduced[k - 1] += e[k];
      }
    }
    b.add(reduced, c);
  }
  return std::move(b).build();
}

std::vector<std::size_t> essential_variables(const Polynomial& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (!partial_derivative(p, i).is_zero()) out.push_back(i);
  }
  return out;
}

}  // namespace medial
