#pragma once

#include <stdexcept>
#include <string>

namespace burgers {

/// Raised when an argument lies outside the domain an operation is defined on
/// (odd s, negative time, T >= 1/2 for the pre-tipping slope, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a numerical procedure cannot deliver its advertised accuracy:
/// quadrature that does not converge, an unstable time step, NaN in a field.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace burgers
