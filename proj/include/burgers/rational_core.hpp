#pragma once

// Exact viscous solution through the Hopf-Cole substitution V = -(2/s) W_Z / W.
// For even s the heat-equation solution W(T, Z) with W(0, Z) = (1 + Z^2)^{s/2}
// is a polynomial in Z^2 whose coefficients are polynomials in T, so V is a
// rational function and every evaluation at rational (T, Z) is exact.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/exact_rational.hpp"
#include "burgers/params.hpp"
#include "burgers/polynomial.hpp"

namespace burgers {

/// W(T, Z) = sum_k c[k](T) Z^{2k}, normalized so that W(0, Z) = (1 + Z^2)^{s/2}.
struct WPolynomial {
  long s = 0;
  std::vector<TPolynomial> c;

  [[nodiscard]] long half_s() const noexcept { return s / 2; }
};

namespace detail {

inline void require_even_s(long s) { (void)Params{s}; }

inline void require_nonnegative_time(const ExactRational& T) {
  if (sgn(T) < 0) throw DomainError("time must be non-negative, got " + exact::to_string(T));
}

}  // namespace detail

/// Coefficient of Z^{2k} in W, as a polynomial in T. The T^j coefficient is
///   binom(s/2, a) (2a)! / (j! (2k)! s^j),  a = k + j,
/// i.e. the binomial/Gaussian-moment double sum with 2^k k! (2k-1)!! = (2k)!
/// and the overall (s/2)! folded in.
inline TPolynomial w_coefficient(long s, long k) {
  detail::require_even_s(s);
  const long r = s / 2;
  if (k < 0 || k > r) throw DomainError("coefficient index k out of range [0, s/2]");

  const ExactInteger two_k_fact = exact::factorial(static_cast<unsigned long>(2 * k));
  std::vector<ExactRational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(r - k + 1));
  ExactInteger s_pow = 1;
  ExactInteger j_fact = 1;
  for (long j = 0; j <= r - k; ++j) {
    if (j > 0) {
      s_pow *= s;
      j_fact *= j;
    }
    const long alpha = k + j;
    const ExactInteger num = exact::binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(alpha)) *
                             exact::factorial(static_cast<unsigned long>(2 * alpha));
    ExactRational term(num, ExactInteger(j_fact * two_k_fact * s_pow));
    term.canonicalize();
    coeffs.push_back(std::move(term));
  }
  return TPolynomial(std::move(coeffs));
}

inline WPolynomial build_w(long s) {
  detail::require_even_s(s);
  WPolynomial w{s, {}};
  w.c.reserve(static_cast<std::size_t>(s / 2 + 1));
  for (long k = 0; k <= s / 2; ++k) w.c.push_back(w_coefficient(s, k));
  return w;
}

/// Indices k at which d c[k]/dT = (2k+2)(2k+1)/s * c[k+1] fails (c[s/2+1] = 0).
/// This is the heat equation W_T = W_ZZ / s restricted to the Z^{2k} basis.
inline std::vector<long> heat_recurrence_defects(const WPolynomial& w) {
  std::vector<long> bad;
  const auto n = static_cast<long>(w.c.size());
  for (long k = 0; k < n; ++k) {
    const TPolynomial lhs = w.c[static_cast<std::size_t>(k)].derivative();
    TPolynomial rhs;
    if (k + 1 < n) {
      rhs = w.c[static_cast<std::size_t>(k + 1)] * exact::make((2 * k + 2) * (2 * k + 1), w.s);
    }
    if (!(lhs == rhs)) bad.push_back(k);
  }
  return bad;
}

/// Structural invariants: length s/2+1, deg c[k] = s/2-k, c[s/2] = 1 and
/// c[k](0) = binom(s/2, k). Returns a description of the first violation.
inline std::optional<std::string> check_w_invariants(const WPolynomial& w) {
  const long r = w.s / 2;
  if (static_cast<long>(w.c.size()) != r + 1) return "length of c is not s/2 + 1";
  for (long k = 0; k <= r; ++k) {
    const auto& ck = w.c[static_cast<std::size_t>(k)];
    if (ck.degree() != r - k) return "degree of c[" + std::to_string(k) + "] is not s/2 - k";
    if (ck.coefficient(0) != ExactRational(exact::binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k)))) {
      return "c[" + std::to_string(k) + "](0) is not binom(s/2, k)";
    }
  }
  if (auto defects = heat_recurrence_defects(w); !defects.empty()) {
    return "heat-equation recurrence fails at k = " + std::to_string(defects.front());
  }
  return std::nullopt;
}

/// W and its first two Z derivatives at one point.
struct WValues {
  ExactRational W;
  ExactRational W_Z;
  ExactRational W_ZZ;
};

/// Values a_k = c[k](T) of the Z^{2k} coefficients at a fixed time.
inline std::vector<ExactRational> w_coefficients_at(const WPolynomial& w, const ExactRational& T) {
  std::vector<ExactRational> a;
  a.reserve(w.c.size());
  for (const auto& ck : w.c) a.push_back(ck(T));
  return a;
}

inline WValues eval_w_derivatives(const std::vector<ExactRational>& a, const ExactRational& Z) {
  const ExactRational u = Z * Z;
  WValues out{0, 0, 0};
  // Horner in u = Z^2 for W, W_Z / Z and W_ZZ.
  ExactRational wz_over_z = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    const long k = static_cast<long>(i);
    out.W = out.W * u + a[i];
    if (k >= 1) {
      wz_over_z = wz_over_z * u + a[i] * (2 * k);
      out.W_ZZ = out.W_ZZ * u + a[i] * (2 * k * (2 * k - 1));
    }
  }
  out.W_Z = wz_over_z * Z;
  return out;
}

inline ExactRational eval_w(const WPolynomial& w, const ExactRational& T, const ExactRational& Z) {
  detail::require_nonnegative_time(T);
  const ExactRational u = Z * Z;
  ExactRational acc = 0;
  for (auto it = w.c.rbegin(); it != w.c.rend(); ++it) acc = acc * u + (*it)(T);
  return acc;
}

struct ViscousSample {
  long s = 0;
  ExactRational T;
  ExactRational Z;
  ExactRational V;
  std::optional<ExactRational> dVdZ;
};

/// Exact viscous solution for a fixed even s. Builds W once; evaluations are
/// const and may run concurrently.
class ViscousSolution {
 public:
  explicit ViscousSolution(long s) : w_(build_w(s)) {}
  explicit ViscousSolution(WPolynomial w) : w_(std::move(w)) {}

  [[nodiscard]] long s() const noexcept { return w_.s; }
  [[nodiscard]] const WPolynomial& w() const noexcept { return w_; }

  [[nodiscard]] ExactRational value(const ExactRational& T, const ExactRational& Z) const {
    return sample(T, Z, false).V;
  }

  [[nodiscard]] ViscousSample sample(const ExactRational& T, const ExactRational& Z, bool with_slope = true) const {
    detail::require_nonnegative_time(T);
    return sample_from(w_coefficients_at(w_, T), T, Z, with_slope);
  }

  /// Evaluates many Z at one T, reusing the coefficient values c[k](T).
  [[nodiscard]] std::vector<ViscousSample> profile(const ExactRational& T, const std::vector<ExactRational>& Zs,
                                                   bool with_slope = false) const {
    detail::require_nonnegative_time(T);
    const auto a = w_coefficients_at(w_, T);
    std::vector<ViscousSample> out;
    out.reserve(Zs.size());
    for (const auto& Z : Zs) out.push_back(sample_from(a, T, Z, with_slope));
    return out;
  }

  /// dV/dZ at Z = 0: -(2/s) * 2 c[1](T) / c[0](T).
  [[nodiscard]] ExactRational slope_at_origin(const ExactRational& T) const {
    detail::require_nonnegative_time(T);
    return exact::make(-4, w_.s) * w_.c[1](T) / w_.c[0](T);
  }

 private:
  [[nodiscard]] ViscousSample sample_from(const std::vector<ExactRational>& a, const ExactRational& T,
                                          const ExactRational& Z, bool with_slope) const {
    const WValues v = eval_w_derivatives(a, Z);
    const ExactRational scale = exact::make(-2, w_.s);
    ViscousSample out{w_.s, T, Z, scale * v.W_Z / v.W, std::nullopt};
    if (with_slope) out.dVdZ = scale * (v.W_ZZ * v.W - v.W_Z * v.W_Z) / (v.W * v.W);
    return out;
  }

  WPolynomial w_;
};

inline ViscousSample eval_viscous(long s, const ExactRational& T, const ExactRational& Z, bool with_slope = true) {
  detail::require_even_s(s);
  detail::require_nonnegative_time(T);
  return ViscousSolution(s).sample(T, Z, with_slope);
}

/// Exact dV/dZ at the origin; only c[0] and c[1] are built, so large s is cheap.
inline ExactRational slope_at_origin_exact(long s, const ExactRational& T) {
  detail::require_even_s(s);
  detail::require_nonnegative_time(T);
  return exact::make(-4, s) * w_coefficient(s, 1)(T) / w_coefficient(s, 0)(T);
}

/// d^2/dZ^2 of dV/dZ at Z = 0, i.e. V_ZZZ(T, 0) = -(12/s)(4 c2/c0 - 2 c1^2/c0^2).
inline ExactRational slope_curvature_at_origin_exact(long s, const ExactRational& T) {
  detail::require_even_s(s);
  detail::require_nonnegative_time(T);
  const ExactRational c0 = w_coefficient(s, 0)(T);
  const ExactRational c1 = w_coefficient(s, 1)(T);
  const ExactRational c2 = s >= 4 ? w_coefficient(s, 2)(T) : ExactRational(0);
  const ExactRational ratio = c1 / c0;
  return exact::make(-12, s) * (4 * c2 / c0 - 2 * ratio * ratio);
}

/// The three terms of V_T + V V_Z - V_ZZ / s approximated by central
/// differences of step h, all in exact arithmetic.
struct ResidualTerms {
  ExactRational V_T;
  ExactRational V_VZ;
  ExactRational V_ZZ;
  ExactRational residual;  ///< |V_T + V V_Z - V_ZZ / s|
};

inline ResidualTerms residual_terms(const ViscousSolution& sol, const ExactRational& T, const ExactRational& Z,
                                    const ExactRational& h) {
  if (sgn(h) <= 0) throw DomainError("residual step h must be positive");
  if (T < h) throw DomainError("residual needs T >= h");
  const ExactRational v0 = sol.value(T, Z);
  const ExactRational vzp = sol.value(T, Z + h);
  const ExactRational vzm = sol.value(T, Z - h);
  const ExactRational vtp = sol.value(T + h, Z);
  const ExactRational vtm = sol.value(T - h, Z);

  ResidualTerms r;
  r.V_T = (vtp - vtm) / (2 * h);
  r.V_VZ = v0 * (vzp - vzm) / (2 * h);
  r.V_ZZ = (vzp - 2 * v0 + vzm) / (h * h);
  r.residual = abs(r.V_T + r.V_VZ - r.V_ZZ / sol.s());
  return r;
}

inline ExactRational residual_check(long s, const ExactRational& T, const ExactRational& Z, const ExactRational& h) {
  return residual_terms(ViscousSolution(s), T, Z, h).residual;
}

}  // namespace burgers
