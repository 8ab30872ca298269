#pragma once

// Large-s behaviour of the slope dV/dZ at Z = 0, checked against the exact
// rational slope. The expansions below are end results only; the exact slope
// is the ground truth for every claim about them.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/exact_rational.hpp"
#include "burgers/inviscid.hpp"
#include "burgers/rational_core.hpp"

namespace burgers {

enum class Regime { pre_tipping, tipping, post_tipping };

inline Regime regime_of(const ExactRational& T) {
  const int c = cmp(T, ExactRational(1, 2));
  return c < 0 ? Regime::pre_tipping : (c == 0 ? Regime::tipping : Regime::post_tipping);
}

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::pre_tipping: return "pre_tipping";
    case Regime::tipping: return "tipping";
    case Regime::post_tipping: return "post_tipping";
  }
  return "unknown";
}

/// -2/(1-2T) + 12T/(1-2T)^3 / s, valid for T < 1/2.
inline double slope_pre_tipping_asym(double s, double T) {
  if (!(T >= 0.0) || !(T < 0.5)) throw DomainError("pre-tipping expansion needs 0 <= T < 1/2");
  if (!(s > 0.0)) throw DomainError("s must be positive");
  const double m = 1.0 - 2.0 * T;
  return -2.0 / m + 12.0 * T / (m * m * m) / s;
}

/// Gamma(3/4) / Gamma(5/4) ~ 1.3520.
inline double tipping_coefficient() { return std::tgamma(0.75) / std::tgamma(1.25); }

/// -Gamma(3/4)/Gamma(5/4) sqrt(s), leading order at T = 1/2.
inline double slope_tipping_asym(double s) {
  if (!(s > 0.0)) throw DomainError("s must be positive");
  return -tipping_coefficient() * std::sqrt(s);
}

inline double critical_time_asym(double s) {
  if (!(s > 0.0)) throw DomainError("s must be positive");
  return 1.0 + 3.0 / s;
}

inline double min_slope_asym(double s) {
  if (!(s > 0.0)) throw DomainError("s must be positive");
  return -s / 2.0 + 1.0 + 7.0 / (2.0 * s);
}

/// d^2/dZ^2 of the slope at (0, Tc).
inline double hessian_zz_asym(double s) {
  if (!(s > 0.0)) throw DomainError("s must be positive");
  return s * s * s / 4.0 - s * s - 5.0 * s / 2.0;
}

struct SlopeReport {
  long s = 0;
  double T = 0.0;
  double exact_slope = 0.0;
  std::optional<double> asym_slope;  ///< no closed expansion for generic T > 1/2
  Regime regime = Regime::pre_tipping;
  std::optional<double> abs_error;
  std::optional<double> rel_error;
};

inline SlopeReport make_slope_report(long s, const ExactRational& T) {
  SlopeReport rep;
  rep.s = s;
  rep.T = exact::to_double(T);
  rep.exact_slope = exact::to_double(slope_at_origin_exact(s, T));
  rep.regime = regime_of(T);
  const auto sd = static_cast<double>(s);
  switch (rep.regime) {
    case Regime::pre_tipping: rep.asym_slope = slope_pre_tipping_asym(sd, rep.T); break;
    case Regime::tipping: rep.asym_slope = slope_tipping_asym(sd); break;
    case Regime::post_tipping: break;
  }
  if (rep.asym_slope) {
    rep.abs_error = std::fabs(rep.exact_slope - *rep.asym_slope);
    rep.rel_error = *rep.abs_error / std::fabs(rep.exact_slope);
  }
  return rep;
}

/// Exact slope at the origin as a function of T for one s; only c[0], c[1]
/// are kept.
class OriginSlope {
 public:
  explicit OriginSlope(long s) : s_(s), c0_(w_coefficient(s, 0)), c1_(w_coefficient(s, 1)) {}

  [[nodiscard]] long s() const noexcept { return s_; }

  [[nodiscard]] ExactRational operator()(const ExactRational& T) const {
    return exact::make(-4, s_) * c1_(T) / c0_(T);
  }

 private:
  long s_;
  TPolynomial c0_;
  TPolynomial c1_;
};

struct CriticalTimeOptions {
  double t_lo = 0.5;
  double t_hi = 4.0;
  double t_tolerance = 1e-10;
  bool mixed_derivative = true;  ///< needs the full W; costly for very large s
};

struct ExtremumReport {
  long s = 0;
  double Tc_numeric = 0.0;
  double Tc_asym = 0.0;
  double min_slope_numeric = 0.0;
  double min_slope_asym = 0.0;
  double hessian_zz_asym = 0.0;
  double hessian_zz_numeric = 0.0;  ///< 5-point stencil on exact dV/dZ
  double hessian_zz_exact = 0.0;    ///< from the W coefficients
  double slope_tt_numeric = 0.0;
  std::optional<double> mixed_derivative_numeric;
  bool hessian_positive = false;
  int iterations = 0;
};

/// Golden-section minimization of the exact slope over T. Comparisons are done
/// on exact rationals, so the search is not limited by double round-off in the
/// flat neighbourhood of the minimum.
inline ExtremumReport find_critical_time(long s, const CriticalTimeOptions& opt = {}) {
  detail::require_even_s(s);
  if (s < 4) throw DomainError("critical time search needs s >= 4");
  const OriginSlope slope(s);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  auto eval = [&](double T) { return slope(exact::from_double(T)); };
  double a = opt.t_lo, b = opt.t_hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  ExactRational f1 = eval(x1), f2 = eval(x2);
  int iterations = 0;
  while (b - a > opt.t_tolerance) {
    ++iterations;
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = eval(x2);
    }
  }
  const double Tc = 0.5 * (a + b);
  if (Tc - opt.t_lo < 1e3 * opt.t_tolerance || opt.t_hi - Tc < 1e3 * opt.t_tolerance) {
    throw NumericalError("slope at the origin is monotone on [" + std::to_string(opt.t_lo) + ", " +
                         std::to_string(opt.t_hi) + "] for s = " + std::to_string(s));
  }

  ExtremumReport rep;
  rep.s = s;
  rep.iterations = iterations;
  rep.Tc_numeric = Tc;
  rep.Tc_asym = critical_time_asym(static_cast<double>(s));
  const ExactRational tc = exact::from_double(Tc);
  const ExactRational f_c = slope(tc);
  rep.min_slope_numeric = exact::to_double(f_c);
  rep.min_slope_asym = min_slope_asym(static_cast<double>(s));
  rep.hessian_zz_asym = hessian_zz_asym(static_cast<double>(s));
  rep.hessian_zz_exact = exact::to_double(slope_curvature_at_origin_exact(s, tc));

  const ExactRational ht(1, 1000);
  rep.slope_tt_numeric = exact::to_double((slope(tc + ht) - 2 * f_c + slope(tc - ht)) / (ht * ht));

  // Z-direction: 5-point stencil on the exact dV/dZ.
  {
    const ViscousSolution sol(s);
    const ExactRational hz = exact::make(1, 100 * s);
    auto vz = [&](const ExactRational& T, const ExactRational& Z) { return *sol.sample(T, Z, true).dVdZ; };
    const ExactRational f0 = vz(tc, 0), f1z = vz(tc, hz), f2z = vz(tc, 2 * hz);
    const ExactRational fm1 = vz(tc, -hz), fm2 = vz(tc, -2 * hz);
    rep.hessian_zz_numeric = exact::to_double((-f2z + 16 * f1z - 30 * f0 + 16 * fm1 - fm2) / (12 * hz * hz));
    if (opt.mixed_derivative) {
      const ExactRational h(1, 1000);
      const ExactRational mixed =
          (vz(tc + h, h) - vz(tc + h, -h) - vz(tc - h, h) + vz(tc - h, -h)) / (4 * h * h);
      rep.mixed_derivative_numeric = exact::to_double(mixed);
    }
  }
  rep.hessian_positive = rep.slope_tt_numeric > 0.0 && rep.hessian_zz_numeric > 0.0;
  return rep;
}

/// Smallest s in `candidates` (taken in the given order) whose extremum has a
/// positive-definite Hessian, or nullopt.
inline std::optional<long> smallest_positive_hessian_s(const std::vector<long>& candidates) {
  for (long s : candidates) {
    CriticalTimeOptions opt;
    opt.mixed_derivative = false;
    try {
      if (find_critical_time(s, opt).hessian_positive) return s;
    } catch (const NumericalError&) {
    }
  }
  return std::nullopt;
}

}  // namespace burgers
