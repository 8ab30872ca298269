#pragma once

// Independent reference values used by the unit tests. None of these call into
// the library's own formulas.

#include <cmath>
#include <vector>

#include "burgers/exact_rational.hpp"

namespace oracle {

using burgers::ExactRational;

/// W(T, Z) = E[(1 + (Z + X)^2)^(s/2)] with X ~ N(0, 2T/s): the heat kernel
/// applied to the initial data, expanded through the Gaussian moments
/// E[X^(2m)] = var^m (2m-1)!!. Pure polynomial algebra in X.
inline ExactRational heat_kernel_w(long s, const ExactRational& T, const ExactRational& Z) {
  const long r = s / 2;
  // p(X) = 1 + (Z + X)^2 = (1 + Z^2) + 2 Z X + X^2
  const std::vector<ExactRational> p{1 + Z * Z, 2 * Z, 1};
  std::vector<ExactRational> acc{1};
  for (long i = 0; i < r; ++i) {
    std::vector<ExactRational> next(acc.size() + 2, ExactRational(0));
    for (std::size_t a = 0; a < acc.size(); ++a) {
      for (std::size_t b = 0; b < 3; ++b) next[a + b] += acc[a] * p[b];
    }
    acc = std::move(next);
  }
  const ExactRational var = 2 * T / s;
  ExactRational moment = 1, out = 0;
  for (std::size_t m = 0; 2 * m < acc.size(); ++m) {
    if (m > 0) moment *= var * static_cast<long>(2 * m - 1);
    out += acc[2 * m] * moment;
  }
  return out;
}

/// dW/dZ of the same expansion, via d/dZ p^r = r p^(r-1) * 2 (Z + X).
inline ExactRational heat_kernel_wz(long s, const ExactRational& T, const ExactRational& Z) {
  const long r = s / 2;
  const std::vector<ExactRational> p{1 + Z * Z, 2 * Z, 1};
  std::vector<ExactRational> acc{2 * Z * r, 2 * ExactRational(r)};  // 2 r (Z + X)
  for (long i = 0; i + 1 < r; ++i) {
    std::vector<ExactRational> next(acc.size() + 2, ExactRational(0));
    for (std::size_t a = 0; a < acc.size(); ++a) {
      for (std::size_t b = 0; b < 3; ++b) next[a + b] += acc[a] * p[b];
    }
    acc = std::move(next);
  }
  const ExactRational var = 2 * T / s;
  ExactRational moment = 1, out = 0;
  for (std::size_t m = 0; 2 * m < acc.size(); ++m) {
    if (m > 0) moment *= var * static_cast<long>(2 * m - 1);
    out += acc[2 * m] * moment;
  }
  return out;
}

/// E1(x) from its convergent series, -gamma - ln x - sum (-x)^n / (n n!).
inline double exponential_integral_e1(double x) {
  const double euler_gamma = 0.57721566490153286061;
  double sum = 0.0, term = 1.0;
  for (int n = 1; n < 200; ++n) {
    term *= -x / n;
    sum += term / n;
    if (std::fabs(term) < 1e-18) break;
  }
  return -euler_gamma - std::log(x) - sum;
}

/// Real roots of -phi^3 + Z phi^2 + (2T-1) phi + Z by bisection on sign changes
/// over a fine scan; slow but independent of any closed form.
inline std::vector<double> cubic_roots_by_scan(double T, double Z) {
  auto f = [&](double x) { return -x * x * x + Z * x * x + (2 * T - 1) * x + Z; };
  const double bound = 2.0 + std::fabs(Z) + std::fabs(2 * T - 1);
  std::vector<double> roots;
  const int n = 200000;
  double x0 = -bound, f0 = f(x0);
  for (int i = 1; i <= n; ++i) {
    const double x1 = -bound + 2 * bound * i / n, f1 = f(x1);
    if (f0 == 0.0) roots.push_back(x0);
    if (f0 * f1 < 0.0) {
      double a = x0, b = x1;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        (f(a) * f(m) <= 0.0 ? b : a) = m;
      }
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

}  // namespace oracle
