#include "medial/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace medial {

namespace {

void require_same_arity(const Polynomial& p, const Polynomial& q) {
  if (p.arity() != q.arity()) throw ArityMismatch(p.arity(), q.arity());
}

void require_index(const Polynomial& p, std::size_t i) {
  if (i >= p.arity()) {
    throw std::out_of_range("variable index " + std::to_string(i) + " out of range for arity " +
                            std::to_string(p.arity()));
  }
}

}  // namespace

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {}

Polynomial Polynomial::constant(std::size_t arity, const Rational& value) {
  PolynomialBuilder b(arity);
  b.add(MultiIndex(arity), value);
  return std::move(b).build();
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t i) {
  if (i >= arity) throw std::out_of_range("variable index out of range");
  PolynomialBuilder b(arity);
  b.add(MultiIndex::unit(arity, i), Rational(1));
  return std::move(b).build();
}

Polynomial Polynomial::monomial(const MultiIndex& exponent, const Rational& coefficient) {
  PolynomialBuilder b(exponent.size());
  b.add(exponent, coefficient);
  return std::move(b).build();
}

Polynomial Polynomial::from_terms(std::size_t arity, std::span<const Term> terms) {
  PolynomialBuilder b(arity);
  for (const auto& t : terms) b.add(t.exponent, t.coefficient);
  return std::move(b).build();
}

Rational Polynomial::coefficient(const MultiIndex& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_canonical() const {
  return std::all_of(terms_.begin(), terms_.end(), [this](const auto& kv) {
    return kv.first.size() == arity_ && !kv.second.is_zero();
  });
}

void PolynomialBuilder::add(const MultiIndex& exponent, const Rational& coefficient) {
  if (exponent.size() != arity_) throw ArityMismatch(arity_, exponent.size());
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) it->second += coefficient;
}

void PolynomialBuilder::add(const Polynomial& p, const Rational& scale) {
  if (p.arity() != arity_) throw ArityMismatch(arity_, p.arity());
  if (scale.is_zero()) return;
  for (const auto& [e, c] : p.terms()) add(e, c * scale);
}

Polynomial PolynomialBuilder::build() && {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  Polynomial out(arity_);
  out.terms_ = std::move(terms_);
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  require_same_arity(p, q);
  PolynomialBuilder b(p.arity());
  b.add(p);
  b.add(q);
  return std::move(b).build();
}

Polynomial subtract(const Polynomial& p, const Polynomial& q) {
  require_same_arity(p, q);
  PolynomialBuilder b(p.arity());
  b.add(p);
  b.add(q, Rational(-1));
  return std::move(b).build();
}

Polynomial negate(const Polynomial& p) { return scale(p, Rational(-1)); }

Polynomial scale(const Polynomial& p, const Rational& c) {
  PolynomialBuilder b(p.arity());
  b.add(p, c);
  return std::move(b).build();
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  require_same_arity(p, q);
  PolynomialBuilder b(p.arity());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) b.add(ep + eq, cp * cq);
  }
  return std::move(b).build();
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.arity(), Rational(1));
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.arity()) throw ArityMismatch(p.arity(), point.size());
  // powers[i][k] = point[i]^k, grown on demand
  std::vector<std::vector<Rational>> powers(p.arity(), std::vector<Rational>{Rational(1)});
  Rational sum;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
      term *= pw[e[i]];
    }
    sum += term;
  }
  return sum;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> args) {
  if (args.size() != p.arity()) throw ArityMismatch(p.arity(), args.size());
  if (args.empty()) throw std::invalid_argument("substitute requires at least one argument");
  const std::size_t m = args.front().arity();
  for (const auto& a : args) {
    if (a.arity() != m) throw ArityMismatch(m, a.arity());
  }

  const Polynomial one = Polynomial::constant(m, Rational(1));
  std::vector<std::vector<Polynomial>> powers(args.size(), std::vector<Polynomial>{one});
  auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& pw = powers[i];
    while (pw.size() <= k) pw.push_back(mul(pw.back(), args[i]));
    return pw[k];
  };

  PolynomialBuilder b(m);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term = mul(term, power_of(i, e[i]));
      if (term.is_zero()) break;
    }
    b.add(term);
  }
  return std::move(b).build();
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
  require_index(p, i);
  PolynomialBuilder b(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    MultiIndex lowered = e;
    lowered[i] -= 1;
    b.add(lowered, c * Rational(static_cast<long>(e[i])));
  }
  return std::move(b).build();
}

Polynomial specialize(const Polynomial& p, std::size_t i, const Rational& value) {
  require_index(p, i);
  std::vector<Rational> powers{Rational(1)};
  PolynomialBuilder b(p.arity());
  for (const auto& [e, c] : p.terms()) {
    while (powers.size() <= e[i]) powers.push_back(powers.back() * value);
    MultiIndex reduced = e;
    reduced[i] = 0;
    b.add(reduced, c * powers[e[i]]);
  }
  return std::move(b).build();
}

std::optional<unsigned> degree(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  // graded order: the first term has maximal total degree
  return static_cast<unsigned>(p.terms().begin()->first.total());
}

unsigned degree_in(const Polynomial& p, std::size_t i) {
  require_index(p, i);
  unsigned d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max<unsigned>(d, e[i]);
  return d;
}

std::optional<Term> is_monomial(const Polynomial& p) {
  if (p.term_count() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  return Term{e, c};
}

}  // namespace medial
