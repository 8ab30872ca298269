#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace burgers::cubic {

/// Monic cubic x^3 + a x^2 + b x + c.
template <typename Real>
struct Monic {
  Real a, b, c;

  [[nodiscard]] Real operator()(Real x) const { return ((x + a) * x + b) * x + c; }
  [[nodiscard]] Real derivative(Real x) const { return (3 * x + 2 * a) * x + b; }
};

/// Newton iteration from a closed-form seed. Keeps the best iterate, so a
/// slow approach to a near-double root never makes the seed worse.
template <typename Real>
Real polish(const Monic<Real>& p, Real x, Real tolerance, int max_iter = 60) {
  Real best = x;
  Real best_res = std::fabs(p(x));
  for (int i = 0; i < max_iter && best_res > tolerance; ++i) {
    const Real d = p.derivative(x);
    if (d == Real(0)) break;
    x -= p(x) / d;
    const Real res = std::fabs(p(x));
    if (!(res < best_res)) {
      if (!std::isfinite(res)) break;
      continue;
    }
    best = x;
    best_res = res;
  }
  return best;
}

/// All real roots, ascending. `one_real` selects the Cardano branch (single
/// real root) rather than the trigonometric three-root branch; callers pass
/// the sign of their own discriminant so the branch choice is consistent.
template <typename Real>
std::vector<Real> real_roots(const Monic<Real>& p, bool one_real, Real tolerance) {
  const Real shift = -p.a / 3;
  const Real q = (p.a * p.a - 3 * p.b) / 9;
  const Real r = (2 * p.a * p.a * p.a - 9 * p.a * p.b + 27 * p.c) / 54;

  std::vector<Real> roots;
  if (one_real) {
    const Real disc = std::max(Real(0), r * r - q * q * q);
    const Real big = -std::copysign(std::cbrt(std::fabs(r) + std::sqrt(disc)), r);
    const Real small = big == Real(0) ? Real(0) : q / big;
    roots.push_back(polish(p, big + small + shift, tolerance));
  } else {
    const Real sq = std::sqrt(std::max(Real(0), q));
    const Real cos_arg = std::clamp(r / (sq * sq * sq), Real(-1), Real(1));
    const Real theta = std::acos(cos_arg);
    const Real two_pi = 2 * std::numbers::pi_v<Real>;
    for (int m = 0; m < 3; ++m) {
      roots.push_back(polish(p, -2 * sq * std::cos((theta + two_pi * m) / 3) + shift, tolerance));
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace burgers::cubic
