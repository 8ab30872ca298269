#pragma once

// Tricomi confluent hypergeometric function U(a, c, z) from its integral
// representation, and the closed forms that tie it to the exact W
// coefficients. Double precision; used to validate the exact path.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/exact_rational.hpp"
#include "burgers/rational_core.hpp"

namespace burgers {

struct UArgs {
  double a = 0.0;
  double c = 0.0;
  double z = 0.0;
};

struct QuadratureSettings {
  double relative_tolerance = 1e-10;
  double absolute_tolerance = 1e-12;
  int max_depth = 60;
  int max_intervals = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

struct Panel {
  double a, b, value, error;
  int depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

/// 7-point Gauss / 15-point Kronrod pair on [a, b]; the error estimate is the
/// difference between the two rules.
template <typename F>
Panel gauss_kronrod_panel(const F& f, double a, double b, int depth) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& xk = kronrod::abscissa();
  const auto& wk = kronrod::weights();
  const auto& wg = gauss::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double kron = wk[0] * f0;
  double gsum = wg[0] * f0;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double fx = f(mid - half * xk[i]) + f(mid + half * xk[i]);
    kron += wk[i] * fx;
    if (i % 2 == 0) gsum += wg[i / 2] * fx;
  }
  return {a, b, kron * half, std::fabs((kron - gsum) * half), depth};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod: repeatedly bisects the panel with the
/// largest error estimate until the summed estimate meets
/// max(abs_tol, rel_tol * |I|), bisection depth reaches max_depth, or the
/// panel budget runs out.
template <typename F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, const QuadratureSettings& settings = {}) {
  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_panel(f, a, b, 0));
  double value = panels.top().value;
  double error = panels.top().error;
  int count = 1;
  auto target = [&] { return std::max(settings.absolute_tolerance, settings.relative_tolerance * std::fabs(value)); };
  while (error > target() && count < settings.max_intervals) {
    const detail::Panel worst = panels.top();
    if (worst.depth >= settings.max_depth) break;
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const auto left = detail::gauss_kronrod_panel(f, worst.a, mid, worst.depth + 1);
    const auto right = detail::gauss_kronrod_panel(f, mid, worst.b, worst.depth + 1);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  return {value, error, count, error <= target()};
}

/// log Gamma(k + 1/2) = log((2k-1)!! sqrt(pi) / 2^k), exact up to the final log.
inline double log_gamma_half_integer(long k) {
  if (k < 0) throw DomainError("half-integer Gamma implemented for k >= 0");
  return exact::log_abs(ExactRational(exact::odd_double_factorial(k))) - static_cast<double>(k) * std::numbers::ln2 +
         0.5 * std::log(std::numbers::pi);
}

inline double gamma_half_integer(long k) { return std::exp(log_gamma_half_integer(k)); }

/// U(a, c, z) = 1/Gamma(a) * int_0^inf e^{-zt} t^{a-1} (1+t)^{c-a-1} dt.
/// The half line is mapped to [0, 1) with t = u / (1 - u); for a < 1 the
/// endpoint singularity is removed first with t = x^{1/a}.
inline double tricomi_u(const UArgs& args, const QuadratureSettings& settings = {}) {
  const double a = args.a, c = args.c, z = args.z;
  if (!(a > 0.0)) throw DomainError("tricomi_u requires a > 0");
  if (!(z > 0.0)) throw DomainError("tricomi_u requires z > 0");

  const double log_gamma_a = std::lgamma(a);
  const double power = c - a - 1.0;
  const bool substitute = a < 1.0;

  // Integrand in t-space times dt/du, as a log to avoid overflow of (1+t)^p.
  auto integrand = [&](double u) -> double {
    if (u <= 0.0) {
      if (substitute) return std::exp(-std::lgamma(a + 1.0));
      return a == 1.0 ? std::exp(-log_gamma_a) : 0.0;
    }
    if (u >= 1.0) return 0.0;
    const double x = u / (1.0 - u);
    const double log_jac = -2.0 * std::log1p(-u);
    double t, log_weight;
    if (substitute) {
      t = std::pow(x, 1.0 / a);
      log_weight = -std::lgamma(a + 1.0);
    } else {
      t = x;
      log_weight = (a - 1.0) * std::log(t) - log_gamma_a;
    }
    if (!std::isfinite(t)) return 0.0;
    const double log_f = -z * t + power * std::log1p(t) + log_weight + log_jac;
    return std::exp(log_f);
  };

  // The absolute floor would swamp tiny U values, so only the relative target
  // is used here.
  QuadratureSettings inner = settings;
  inner.absolute_tolerance = std::numeric_limits<double>::min();
  inner.relative_tolerance = settings.relative_tolerance * 1e-2;
  const QuadratureResult q = integrate_adaptive(integrand, 0.0, 1.0, inner);
  if (!std::isfinite(q.value) || q.error > settings.relative_tolerance * std::fabs(q.value)) {
    throw NumericalError("tricomi_u(" + std::to_string(a) + ", " + std::to_string(c) + ", " + std::to_string(z) +
                         ") did not converge: error estimate " + std::to_string(q.error));
  }
  return q.value;
}

/// dV/dZ at Z = 0 through the ratio -(s/2T) U(3/2, (3+s)/2, s/4T) / U(1/2, (3+s)/2, s/4T).
inline double slope_at_origin_hyp(long s, double T, const QuadratureSettings& settings = {}) {
  detail::require_even_s(s);
  if (!(T > 0.0)) throw DomainError("slope_at_origin_hyp requires T > 0");
  const double sd = static_cast<double>(s);
  const double c = (3.0 + sd) / 2.0;
  const double z = sd / (4.0 * T);
  return -sd / (2.0 * T) * tricomi_u({1.5, c, z}, settings) / tricomi_u({0.5, c, z}, settings);
}

/// Exact binomial-weighted sum
///   sum_{a=k}^{s/2} binom(s/2, a) (2a)! / (a-k)! (T/s)^{a-k} = (2k)! c[k](T).
inline ExactRational coefficient_sum_exact(long s, long k, const ExactRational& T) {
  return w_coefficient(s, k)(T) * ExactRational(exact::factorial(static_cast<unsigned long>(2 * k)));
}

/// log of (s/T)^{k+1/2} (s/2)! Gamma(1/2+k) U(1/2+k, (3+s)/2, s/4T) / (2 sqrt(pi) (s/2-k)!),
/// the hypergeometric closed form of coefficient_sum_exact. Prefactors are
/// combined in log space since both sides grow factorially.
inline double coefficient_sum_hyp_log(long s, long k, double T, const QuadratureSettings& settings = {}) {
  detail::require_even_s(s);
  if (k < 0 || k > s / 2) throw DomainError("k must lie in [0, s/2]");
  if (!(T > 0.0)) throw DomainError("T must be positive");
  const double sd = static_cast<double>(s);
  const double u = tricomi_u({0.5 + static_cast<double>(k), (3.0 + sd) / 2.0, sd / (4.0 * T)}, settings);
  return (static_cast<double>(k) + 0.5) * std::log(sd / T) + std::lgamma(static_cast<double>(s / 2) + 1.0) +
         log_gamma_half_integer(k) + std::log(u) -
         std::numbers::ln2 - 0.5 * std::log(std::numbers::pi) - std::lgamma(static_cast<double>(s / 2 - k) + 1.0);
}

/// Relative discrepancy between the exact coefficient sum and its
/// hypergeometric closed form.
inline double verify_coefficient_sum_identity(long s, long k, double T, const QuadratureSettings& settings = {}) {
  const double log_exact = exact::log_abs(coefficient_sum_exact(s, k, exact::from_double(T)));
  return std::fabs(std::expm1(coefficient_sum_hyp_log(s, k, T, settings) - log_exact));
}

}  // namespace burgers
