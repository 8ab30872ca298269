#pragma once

// Inviscid limit V_T + V V_Z = 0 with V(0, Z) = -2Z / (1 + Z^2). Along
// characteristics V = f(phi) with phi = Z - V T, f(x) = -2x / (1 + x^2); the
// foot point phi solves -phi^3 + Z phi^2 + (2T - 1) phi + Z = 0.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "burgers/cubic.hpp"
#include "burgers/errors.hpp"

namespace burgers {

/// Discriminant data of the characteristic cubic at (T, Z). D > 0 means one
/// real foot point, D < 0 three.
struct CubicPoint {
  double T = 0.0;
  double Z = 0.0;
  double B = 0.0;  ///< -Z (9 + 9T + Z^2)
  double D = 0.0;  ///< 3Z^4 - 3Z^2 (T(T - 10) - 2) - 3(2T - 1)^3

  static CubicPoint at(double T, double Z) {
    const double z2 = Z * Z;
    const double m = 2.0 * T - 1.0;
    return {T, Z, -Z * (9.0 + 9.0 * T + z2), 3.0 * z2 * z2 - 3.0 * z2 * (T * (T - 10.0) - 2.0) - 3.0 * m * m * m};
  }
};

inline double initial_profile(double Z) { return -2.0 * Z / (1.0 + Z * Z); }

/// Residual tolerance for foot points: 1e-13 * max(1, |Z|^3).
inline double phi_tolerance(double Z) { return 1e-13 * std::max(1.0, std::fabs(Z * Z * Z)); }

/// phi^3 - Z phi^2 + (1 - 2T) phi - Z, the cubic in monic form.
inline cubic::Monic<double> characteristic_cubic(double T, double Z) { return {-Z, 1.0 - 2.0 * T, -Z}; }

/// All real foot points phi, ascending.
inline std::vector<double> solve_phi(double T, double Z) {
  if (!(T >= 0.0)) throw DomainError("time must be non-negative");
  const CubicPoint cp = CubicPoint::at(T, Z);
  return cubic::real_roots(characteristic_cubic(T, Z), cp.D >= 0.0, phi_tolerance(Z));
}

/// The foot point of the smooth left branch for Z <= 0: the root reached by
/// continuing phi = Z from T = 0. For Z < 0 every other real root is positive
/// (those characteristics started right of the origin and crossed it), so the
/// continued root is the smallest one.
inline double left_branch_phi(double T, double Z) {
  if (Z > 0.0) throw DomainError("left branch is defined for Z <= 0");
  return solve_phi(T, Z).front();
}

/// Continues the foot point from phi = Z at T = 0 by predictor-free Newton
/// stepping in T with step <= max_step, halving the step whenever Newton fails
/// to converge near the previous root. Independent of the branch-selection rule
/// in left_branch_phi.
inline double track_foot_point(double T, double Z, double max_step = 0.01) {
  if (!(T >= 0.0)) throw DomainError("time must be non-negative");
  double t = 0.0;
  double phi = Z;
  double step = max_step;
  while (t < T) {
    const double t_next = std::min(T, t + step);
    const auto p = characteristic_cubic(t_next, Z);
    double x = phi;
    bool ok = false;
    for (int i = 0; i < 50; ++i) {
      const double d = p.derivative(x);
      if (d == 0.0) break;
      const double dx = p(x) / d;
      x -= dx;
      if (std::fabs(dx) <= 1e-15 * std::max(1.0, std::fabs(x))) {
        ok = true;
        break;
      }
    }
    if (ok && std::fabs(x - phi) <= 0.25 * std::max(1e-3, std::fabs(phi))) {
      phi = x;
      t = t_next;
      step = std::min(max_step, step * 2.0);
    } else if (step > 1e-12) {
      step *= 0.5;
    } else {
      throw NumericalError("foot-point continuation stalled");
    }
  }
  return cubic::polish(characteristic_cubic(T, Z), phi, phi_tolerance(Z));
}

struct InviscidSample {
  double T = 0.0;
  double Z = 0.0;
  double weak_value = 0.0;      ///< single-valued antisymmetric weak solution
  std::vector<double> branches;  ///< every real characteristic value, ascending
  double left_limit = 0.0;
  double right_limit = 0.0;
  bool shock = false;  ///< true at Z = 0 once T > 1/2
};

inline InviscidSample eval_inviscid(double T, double Z) {
  if (!(T >= 0.0)) throw DomainError("time must be non-negative");
  InviscidSample out;
  out.T = T;
  out.Z = Z;
  if (T == 0.0) {
    out.weak_value = out.left_limit = out.right_limit = initial_profile(Z);
    out.branches = {out.weak_value};
    return out;
  }

  // V = f(phi) equals (Z - phi) / T on the cubic but has no 1/T amplification
  // of the root error.
  const auto roots = solve_phi(T, Z);
  for (double phi : roots) out.branches.push_back(initial_profile(phi));
  std::sort(out.branches.begin(), out.branches.end());

  if (Z < 0.0) {
    out.weak_value = initial_profile(left_branch_phi(T, Z));
  } else if (Z > 0.0) {
    out.weak_value = -initial_profile(left_branch_phi(T, -Z));
  } else {
    out.weak_value = 0.0;
  }
  out.left_limit = out.right_limit = out.weak_value;

  if (Z == 0.0 && T > 0.5) {
    // One-sided limits come from the outermost characteristics: the left state
    // started at the most negative foot point, the right state at the most
    // positive one.
    out.shock = true;
    out.left_limit = initial_profile(roots.front());
    out.right_limit = initial_profile(roots.back());
  }
  return out;
}

/// dV/dZ at the origin for the inviscid solution, -2 / (1 - 2T). Returns -inf
/// at the tipping time T = 1/2; later times have a shock there.
inline double inviscid_slope_origin(double T) {
  if (!(T >= 0.0)) throw DomainError("time must be non-negative");
  if (T == 0.5) return -std::numeric_limits<double>::infinity();
  if (T > 0.5) throw DomainError("inviscid slope at the origin is undefined after tipping (T > 1/2)");
  return -2.0 / (1.0 - 2.0 * T);
}

/// |V - f(Z - V T)|, the implicit-relation residual of a characteristic value.
inline double implicit_residual(double T, double Z, double V) { return std::fabs(V - initial_profile(Z - V * T)); }

}  // namespace burgers
