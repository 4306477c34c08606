#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "medial/polynomial.hpp"

namespace medial {

/// P = sum_k P_k with every stored P_k nonzero and homogeneous of degree k.
struct HomogeneousDecomposition {
  std::size_t arity;
  std::map<unsigned, Polynomial> components;

  /// Sum of the components; reconstructs the decomposed polynomial.
  Polynomial sum() const;
};

/// [P]_k: the terms of total degree exactly k (zero when there are none).
Polynomial homogeneous_component(const Polynomial& p, unsigned k);

HomogeneousDecomposition decompose(const Polynomial& p);

/// True when every term has the same total degree (the zero polynomial counts).
bool is_homogeneous(const Polynomial& p);

/// x -> P(x + shift), expanded with the multivariate Taylor formula
///   P(x + y) = sum_alpha y^alpha / alpha! * (d^alpha P)(x).
Polynomial taylor_shift(const Polynomial& p, std::span<const Rational> shift);

/// Conjugation by the translation t -> t + b: x -> P(x + b*1) - b.
Polynomial conjugate_translate(const Polynomial& p, const Rational& b);

/// sigma(P)(x) = P(x_sigma(0), ..., x_sigma(n-1)), with sigma given 0-based.
/// Throws std::invalid_argument if sigma is not a permutation of 0..n-1.
Polynomial permute(const Polynomial& p, std::span<const std::size_t> sigma);

/// Identification of variables I_{i,j} for 0-based i < j: the (n-1)-ary
/// polynomial x -> P(x_0, ..., x_{j-1}, x_i, x_j, ..., x_{n-2}).
Polynomial identify(const Polynomial& p, std::size_t i, std::size_t j);

/// Indices (0-based, ascending) of the variables with a nonzero formal partial derivative.
std::vector<std::size_t> essential_variables(const Polynomial& p);

}  // namespace medial
