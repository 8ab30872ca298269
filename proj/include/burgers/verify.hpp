#pragma once

// Self-verification suite behind `burgers verify`: each check measures one
// invariant and compares it with a fixed threshold.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgers/asymptotics.hpp"
#include "burgers/comparison.hpp"
#include "burgers/inviscid.hpp"
#include "burgers/rational_core.hpp"
#include "burgers/special_functions.hpp"

namespace burgers {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  /// Fault injection: perturbs one W coefficient before the recurrence check.
  bool perturb_w_coefficient = false;
  unsigned seed = 20240601;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      j["checks"].push_back({{"name", c.name},
                             {"passed", c.passed},
                             {"measured", c.measured},
                             {"threshold", c.threshold},
                             {"detail", c.detail}});
    }
    return j;
  }
};

namespace detail {

/// Random rational num/den with |num| <= max_num, 1 <= den <= max_den.
inline ExactRational random_rational(std::mt19937_64& rng, long lo_num, long hi_num, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(lo_num * d, hi_num * d);
  return exact::make(num(rng), d);
}

inline CheckResult le(std::string name, double measured, double threshold, std::string detail = {}) {
  return {std::move(name), measured <= threshold, measured, threshold, std::move(detail)};
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt) {
  const bool full = opt.level == VerifyLevel::full;
  std::mt19937_64 rng(opt.seed);
  VerifyReport rep;

  {
    long defects = 0;
    std::string where;
    for (long s = 2; s <= (full ? 40 : 20); s += 2) {
      WPolynomial w = build_w(s);
      if (opt.perturb_w_coefficient && s >= 4) {
        auto coeffs = w.c[1].coefficients();
        coeffs[1] += ExactRational(1, 1000000);
        w.c[1] = TPolynomial(coeffs);
      }
      const auto bad = heat_recurrence_defects(w);
      if (!bad.empty() && where.empty()) where = "first failure at s=" + std::to_string(s) + ", k=" + std::to_string(bad.front());
      defects += static_cast<long>(bad.size());
    }
    rep.checks.push_back(detail::le("heat_equation_recurrence", static_cast<double>(defects), 0.0, where));
  }

  {
    long bad = 0;
    for (long s = 2; s <= (full ? 40 : 20); s += 2) {
      WPolynomial w = build_w(s);
      const auto r = s / 2;
      if (static_cast<long>(w.c.size()) != r + 1) ++bad;
      for (long k = 0; k <= r; ++k) {
        const auto& ck = w.c[static_cast<std::size_t>(k)];
        if (ck.degree() != r - k) ++bad;
        if (ck.coefficient(0) != ExactRational(exact::binomial(r, k))) ++bad;
      }
    }
    rep.checks.push_back(detail::le("w_polynomial_structure", static_cast<double>(bad), 0.0));
  }

  {
    const ViscousSolution s2(2), s4(4);
    long mismatches = 0;
    const int n = full ? 100 : 20;
    for (int i = 0; i < n; ++i) {
      const ExactRational T = detail::random_rational(rng, 0, 4, 17);
      const ExactRational Z = detail::random_rational(rng, -10, 10, 23);
      if (s2.value(T, Z) != -2 * Z / (1 + T + Z * Z)) ++mismatches;
      const ExactRational w = (1 + T + 3 * T * T / 4) + (2 + 3 * T) * Z * Z + Z * Z * Z * Z;
      const ExactRational wz = 2 * (2 + 3 * T) * Z + 4 * Z * Z * Z;
      if (s4.value(T, Z) != -wz / (2 * w)) ++mismatches;
    }
    rep.checks.push_back(detail::le("closed_forms_s2_s4", static_cast<double>(mismatches), 0.0));
  }

  {
    long mismatches = 0;
    for (long s : {2L, 10L, 40L}) {
      const ViscousSolution sol(s);
      for (int i = 0; i < (full ? 30 : 8); ++i) {
        const ExactRational Z = detail::random_rational(rng, -6, 6, 29);
        const ExactRational T = detail::random_rational(rng, 0, 3, 13);
        if (sol.value(0, Z) * (1 + Z * Z) != -2 * Z) ++mismatches;
        if (sol.value(T, -Z) != -sol.value(T, Z)) ++mismatches;
      }
    }
    rep.checks.push_back(detail::le("initial_condition_and_antisymmetry", static_cast<double>(mismatches), 0.0));
  }

  {
    // Error ratio under h-halving for the finite-difference PDE residual.
    double worst = 0.0;
    long points = 0;
    for (long s : full ? std::vector<long>{2, 10, 100} : std::vector<long>{2, 10}) {
      const ViscousSolution sol(s);
      for (int i = 0; i < (full ? 20 : 4); ++i) {
        const ExactRational T = detail::random_rational(rng, 0, 2, 7) + ExactRational(1, 10);
        const ExactRational Z = detail::random_rational(rng, -3, 3, 11);
        const ExactRational h = exact::make(1, 20 * s);
        const double r1 = exact::to_double(residual_terms(sol, T, Z, h).residual);
        const double r2 = exact::to_double(residual_terms(sol, T, Z, h / 2).residual);
        worst = std::max(worst, std::fabs(r1 / r2 - 4.0));
        ++points;
      }
    }
    rep.checks.push_back(detail::le("pde_residual_second_order", worst, 1.0,
                                    "max |ratio - 4| over " + std::to_string(points) + " points"));
  }

  {
    double worst = 0.0;
    for (double T : {0.6, 1.0, 2.0}) {
      const auto sample = eval_inviscid(T, 0.0);
      worst = std::max(worst, std::fabs(sample.left_limit + sample.right_limit));
    }
    rep.checks.push_back(detail::le("rankine_hugoniot", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (double T : {0.1, 0.3, 0.5, 0.75, 1.0, 2.0}) {
      for (int i = 0; i <= 160; ++i) {
        const double Z = -4.0 + 0.05 * i;
        for (double V : eval_inviscid(T, Z).branches) {
          worst = std::max(worst, implicit_residual(T, Z, V) / (1.0 + std::fabs(V)));
        }
      }
    }
    rep.checks.push_back(detail::le("implicit_relation_residual", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (double a : {0.5, 1.5, 3.0}) {
      for (double z : {0.5, 2.0, 10.0}) {
        worst = std::max(worst, std::fabs(tricomi_u({a, a + 1.0, z}) * std::pow(z, a) - 1.0));
      }
    }
    rep.checks.push_back(detail::le("tricomi_u_power_case", worst, 1e-9));
  }

  {
    double worst = 0.0;
    const std::vector<long> ss = full ? std::vector<long>{2, 4, 6, 8, 10, 12, 16, 20, 24, 30, 36, 40}
                                      : std::vector<long>{2, 10, 40};
    const std::vector<double> ts = full ? std::vector<double>{0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0}
                                        : std::vector<double>{0.1, 1.0, 4.0};
    for (long s : ss) {
      for (double T : ts) {
        const double exact_slope = exact::to_double(slope_at_origin_exact(s, exact::from_double(T)));
        worst = std::max(worst, std::fabs(slope_at_origin_hyp(s, T) / exact_slope - 1.0));
      }
    }
    rep.checks.push_back(detail::le("slope_hypergeometric_vs_exact", worst, 1e-8));
  }

  if (!full) return rep;

  {
    double worst = 0.0;
    for (long s = 2; s <= 20; s += 2) {
      for (long k = 0; k <= s / 2; ++k) {
        for (double T : {0.1, 0.5, 1.0, 2.0, 3.0}) worst = std::max(worst, verify_coefficient_sum_identity(s, k, T));
      }
    }
    rep.checks.push_back(detail::le("coefficient_sum_identity", worst, 1e-7));
  }

  {
    const double scaled = 400.0 * (exact::to_double(slope_at_origin_exact(400, ExactRational(1, 4))) + 4.0);
    rep.checks.push_back(detail::le("pre_tipping_first_order_coefficient", std::fabs(scaled / 24.0 - 1.0), 0.05,
                                    "s*(slope+4) = " + std::to_string(scaled)));
  }

  {
    const double ratio = exact::to_double(slope_at_origin_exact(1000, ExactRational(1, 2))) / std::sqrt(1000.0);
    rep.checks.push_back({"tipping_sqrt_s_scaling", ratio >= -1.42 && ratio <= -1.28, ratio, -1.35,
                          "slope/sqrt(s) at s=1000, accepted range [-1.42, -1.28]"});
  }

  {
    CriticalTimeOptions copt;
    copt.mixed_derivative = false;
    const auto ext = find_critical_time(100, copt);
    rep.checks.push_back(detail::le("critical_time_s100", std::fabs(ext.Tc_numeric - 1.03), 0.01,
                                    "Tc = " + std::to_string(ext.Tc_numeric)));
    rep.checks.push_back(detail::le("min_slope_s100", std::fabs(ext.min_slope_numeric + 48.97), 0.05,
                                    "min slope = " + std::to_string(ext.min_slope_numeric)));
  }

  {
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    std::string gaps;
    for (long s : {10L, 20L, 40L, 80L, 160L}) {
      const double gap = max_viscous_inviscid_gap(s, 1.0, -8.0, 8.0, 321, 10.0 / static_cast<double>(s));
      monotone = monotone && gap < prev;
      prev = gap;
      gaps += (gaps.empty() ? "" : ", ") + std::to_string(gap);
    }
    rep.checks.push_back({"viscous_to_inviscid_convergence", monotone, prev, 0.0, "gaps: " + gaps});
  }
  return rep;
}

}  // namespace burgers
