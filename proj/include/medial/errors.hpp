#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace medial {

/// Two operands (or a polynomial and a point) disagree on the number of variables.
class ArityMismatch : public std::invalid_argument {
 public:
  ArityMismatch(std::size_t expected, std::size_t actual)
      : std::invalid_argument("arity mismatch: expected " + std::to_string(expected) + ", got " +
                              std::to_string(actual)) {}
};

/// A symbolic computation would exceed the configured term ceiling.
class ResourceExceeded : public std::runtime_error {
 public:
  ResourceExceeded(double projected, std::size_t ceiling)
      : std::runtime_error("resource exceeded: projected " + std::to_string(projected) +
                           " terms, ceiling " + std::to_string(ceiling)),
        projected_(projected),
        ceiling_(ceiling) {}

  double projected() const noexcept { return projected_; }
  std::size_t ceiling() const noexcept { return ceiling_; }

 private:
  double projected_;
  std::size_t ceiling_;
};

/// The fast classifier rejected a polynomial for which no witness exists.
/// Only reachable through an implementation bug; the CLI reports it as a
/// cross-check disagreement.
class InconsistentVerdict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace medial
