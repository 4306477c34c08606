#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace medial {

/// Exponent vector alpha in N^n; x^alpha = prod x_i^alpha_i.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t arity) : exponents_(arity, 0) {}
  MultiIndex(std::initializer_list<value_type> exponents) : exponents_(exponents) {}
  explicit MultiIndex(std::vector<value_type> exponents) : exponents_(std::move(exponents)) {}

  static MultiIndex unit(std::size_t arity, std::size_t i) {
    MultiIndex m(arity);
    m.exponents_[i] = 1;
    return m;
  }

  std::size_t size() const noexcept { return exponents_.size(); }
  value_type operator[](std::size_t i) const { return exponents_[i]; }
  value_type& operator[](std::size_t i) { return exponents_[i]; }

  /// |alpha|
  std::uint64_t total() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
  }

  const std::vector<value_type>& exponents() const noexcept { return exponents_; }
  auto begin() const { return exponents_.begin(); }
  auto end() const { return exponents_.end(); }

  MultiIndex& operator+=(const MultiIndex& rhs) {
    for (std::size_t i = 0; i < exponents_.size(); ++i) exponents_[i] += rhs.exponents_[i];
    return *this;
  }
  friend MultiIndex operator+(MultiIndex lhs, const MultiIndex& rhs) { return lhs += rhs; }

  // Plain lexicographic order.
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<value_type> exponents_;
};

/// Canonical term order: higher total degree first, ties broken by
/// descending lexicographic order.
struct GradedLexGreater {
  bool operator()(const MultiIndex& lhs, const MultiIndex& rhs) const {
    const auto lt = lhs.total();
    const auto rt = rhs.total();
    if (lt != rt) return lt > rt;
    return lhs > rhs;
  }
};

}  // namespace medial
