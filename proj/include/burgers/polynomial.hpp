#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "burgers/exact_rational.hpp"

namespace burgers {

/// Univariate polynomial with coefficients indexed by power. Trailing zero
/// coefficients are trimmed so degree() is exact; the zero polynomial has no
/// coefficients and degree -1.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  [[nodiscard]] const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

  [[nodiscard]] Coeff coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Coeff(0);
  }

  template <typename X>
  [[nodiscard]] X operator()(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + X(*it);
    }
    return acc;
  }

  [[nodiscard]] Polynomial derivative() const {
    std::vector<Coeff> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Coeff(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial& operator*=(const Coeff& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator*(Polynomial p, const Coeff& c) { return p *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using TPolynomial = Polynomial<ExactRational>;

}  // namespace burgers
