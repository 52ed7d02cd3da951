#pragma once

#include <stdexcept>
#include <string>

namespace mbraid {

/// A requested construction would exceed a dimension guard.
class DimensionError : public std::length_error {
 public:
  explicit DimensionError(const std::string& what)
      : std::length_error("dimension guard: " + what) {}
};

/// An argument is mathematically outside an operation's domain
/// (non-invertible element, non-unitary gate, bad loop value, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mbraid
