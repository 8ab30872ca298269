#pragma once

// Method-of-lines finite-difference solver for V_T + V V_Z = V_ZZ / s on
// [-A, A] with Dirichlet data -/+V(s, T, A) from the exact solution, and the
// harness that scores it against the exact reference.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgers/errors.hpp"
#include "burgers/fast_viscous.hpp"
#include "burgers/inviscid.hpp"

namespace burgers {

enum class Scheme { central, upwind };

inline std::string to_string(Scheme s) { return s == Scheme::central ? "central" : "upwind"; }

inline Scheme parse_scheme(const std::string& name) {
  if (name == "central") return Scheme::central;
  if (name == "upwind") return Scheme::upwind;
  throw DomainError("unknown scheme '" + name + "' (expected central or upwind)");
}

struct GridSpec {
  double A = 10.0;
  long nz = 401;
  double dt = 0.0;  ///< 0 selects the largest stable step
  double t_end = 1.0;
  Scheme scheme = Scheme::central;

  [[nodiscard]] double dz() const { return 2.0 * A / static_cast<double>(nz - 1); }
};

inline constexpr double kStabilitySafety = 0.8;

/// safety * min(dz^2 s / 2, dz / vmax)
inline double stable_dt(const GridSpec& spec, long s, double vmax) {
  const double dz = spec.dz();
  const double diffusive = dz * dz * static_cast<double>(s) / 2.0;
  const double advective = vmax > 0.0 ? dz / vmax : diffusive;
  return kStabilitySafety * std::min(diffusive, advective);
}

inline void validate(const GridSpec& spec, long s) {
  if (!(spec.A > 0.0)) throw DomainError("A must be positive");
  if (spec.nz < 16) throw DomainError("nz must be at least 16");
  if (!(spec.t_end > 0.0)) throw DomainError("t_end must be positive");
  if (spec.dt < 0.0) throw DomainError("dt must be positive (or 0 for automatic)");
  detail::require_even_s(s);
}

struct FdSolution {
  std::vector<double> Z;
  std::vector<double> V;
  double t = 0.0;
  long steps = 0;
  double dt = 0.0;
};

inline std::vector<double> grid_points(const GridSpec& spec) {
  std::vector<double> z(static_cast<std::size_t>(spec.nz));
  const double dz = spec.dz();
  const long mid = (spec.nz - 1) / 2;
  for (long i = 0; i < spec.nz; ++i) {
    // Mirror-exact for odd nz: Z[i] = -Z[nz-1-i].
    z[static_cast<std::size_t>(i)] =
        (spec.nz % 2 == 1) ? static_cast<double>(i - mid) * dz : -spec.A + static_cast<double>(i) * dz;
  }
  return z;
}

namespace detail {

inline void rhs(const std::vector<double>& v, double dz, double inv_s, Scheme scheme, std::vector<double>& out) {
  const std::size_t n = v.size();
  out.assign(n, 0.0);
  const double inv_2dz = 1.0 / (2.0 * dz);
  const double inv_dz = 1.0 / dz;
  const double inv_dz2 = 1.0 / (dz * dz);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    double advection;
    if (scheme == Scheme::central) {
      advection = v[i] * (v[i + 1] - v[i - 1]) * inv_2dz;
    } else {
      advection = v[i] > 0.0 ? v[i] * (v[i] - v[i - 1]) * inv_dz : v[i] * (v[i + 1] - v[i]) * inv_dz;
    }
    out[i] = -advection + inv_s * (v[i + 1] - 2.0 * v[i] + v[i - 1]) * inv_dz2;
  }
}

}  // namespace detail

/// Explicit Heun (RK2) time stepping; boundary nodes carry the exact values
/// -/+V(s, T, A) at every stage time.
inline FdSolution solve_fd(const GridSpec& spec, long s, const FastViscous& reference) {
  validate(spec, s);
  FdSolution sol;
  sol.Z = grid_points(spec);
  const std::size_t n = sol.Z.size();
  sol.V.resize(n);
  double vmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sol.V[i] = initial_profile(sol.Z[i]);
    vmax = std::max(vmax, std::fabs(sol.V[i]));
  }

  const double limit = stable_dt(spec, s, vmax);
  double dt = spec.dt > 0.0 ? spec.dt : limit;
  if (dt > limit * (1.0 + 1e-12)) {
    throw NumericalError("dt = " + std::to_string(dt) + " exceeds the stability limit " + std::to_string(limit));
  }
  const long steps = std::max(1L, static_cast<long>(std::ceil(spec.t_end / dt - 1e-12)));
  dt = spec.t_end / static_cast<double>(steps);

  const double dz = spec.dz();
  const double inv_s = 1.0 / static_cast<double>(s);
  auto apply_boundary = [&](std::vector<double>& v, double t) {
    const double vb = reference(t, spec.A).V;
    v.front() = -vb;
    v.back() = vb;
  };

  std::vector<double> k1, k2, stage(n);
  double t = 0.0;
  for (long step = 0; step < steps; ++step) {
    detail::rhs(sol.V, dz, inv_s, spec.scheme, k1);
    for (std::size_t i = 0; i < n; ++i) stage[i] = sol.V[i] + dt * k1[i];
    apply_boundary(stage, t + dt);
    detail::rhs(stage, dz, inv_s, spec.scheme, k2);
    for (std::size_t i = 1; i + 1 < n; ++i) sol.V[i] += 0.5 * dt * (k1[i] + k2[i]);
    t = static_cast<double>(step + 1) * dt;
    apply_boundary(sol.V, t);
    if (!std::all_of(sol.V.begin(), sol.V.end(), [](double x) { return std::isfinite(x); })) {
      throw NumericalError("non-finite value in the solution at T = " + std::to_string(t));
    }
  }
  sol.t = t;
  sol.steps = steps;
  sol.dt = dt;
  return sol;
}

inline FdSolution solve_fd(const GridSpec& spec, long s) { return solve_fd(spec, s, FastViscous(s)); }

struct BenchmarkResult {
  GridSpec spec;
  long s = 0;
  double l2_error = 0.0;
  double linf_error = 0.0;
  double error_location = 0.0;
  long steps = 0;
  double dt = 0.0;
  std::optional<double> convergence_order;
};

/// Error norms over interior nodes; l2 is the grid norm sqrt(dz * sum e^2).
inline BenchmarkResult score(const GridSpec& spec, long s, const FdSolution& sol, const FastViscous& reference) {
  BenchmarkResult res;
  res.spec = spec;
  res.s = s;
  res.steps = sol.steps;
  res.dt = sol.dt;
  const auto profile = reference.at_time(sol.t);
  double sum2 = 0.0;
  for (std::size_t i = 1; i + 1 < sol.Z.size(); ++i) {
    const double e = std::fabs(sol.V[i] - profile(sol.Z[i]).V);
    sum2 += e * e;
    if (e > res.linf_error) {
      res.linf_error = e;
      res.error_location = sol.Z[i];
    }
  }
  res.l2_error = std::sqrt(sum2 * spec.dz());
  return res;
}

inline BenchmarkResult run_benchmark(const GridSpec& spec, long s) {
  const FastViscous reference(s);
  return score(spec, s, solve_fd(spec, s, reference), reference);
}

/// Runs `spec` and the grid with halved spacing (2 nz - 1 points, dt / 4) and
/// reports the observed order log2(linf_coarse / linf_fine) on the coarse result.
inline BenchmarkResult run_refinement(const GridSpec& spec, long s, BenchmarkResult* fine_out = nullptr) {
  const FastViscous reference(s);
  GridSpec coarse = spec;
  if (coarse.dt == 0.0) coarse.dt = stable_dt(coarse, s, 1.0);
  GridSpec fine = coarse;
  fine.nz = 2 * coarse.nz - 1;
  fine.dt = coarse.dt / 4.0;
  BenchmarkResult c = score(coarse, s, solve_fd(coarse, s, reference), reference);
  const BenchmarkResult f = score(fine, s, solve_fd(fine, s, reference), reference);
  c.convergence_order = std::log2(c.linf_error / f.linf_error);
  if (fine_out) *fine_out = f;
  return c;
}

struct BenchmarkConfig {
  GridSpec spec;
  long s = 2;
};

/// key = value lines; '#' starts a comment. Keys: A, nz, dt, t_end, s, scheme.
inline BenchmarkConfig parse_benchmark_config(std::istream& in) {
  BenchmarkConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string x) {
      const auto b = x.find_first_not_of(" \t\r");
      const auto e = x.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "A") {
        cfg.spec.A = std::stod(value);
      } else if (key == "nz") {
        cfg.spec.nz = std::stol(value);
      } else if (key == "dt") {
        cfg.spec.dt = std::stod(value);
      } else if (key == "t_end") {
        cfg.spec.t_end = std::stod(value);
      } else if (key == "s") {
        cfg.s = std::stol(value);
      } else if (key == "scheme") {
        cfg.spec.scheme = parse_scheme(value);
      } else {
        throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw DomainError("config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
    } catch (const std::out_of_range&) {
      throw DomainError("config line " + std::to_string(lineno) + ": value out of range for '" + key + "'");
    }
  }
  return cfg;
}

inline nlohmann::ordered_json to_json(const BenchmarkResult& r) {
  nlohmann::ordered_json j;
  j["s"] = r.s;
  j["grid"] = {{"A", r.spec.A}, {"nz", r.spec.nz}, {"dt", r.dt}, {"t_end", r.spec.t_end},
               {"scheme", to_string(r.spec.scheme)}};
  j["steps"] = r.steps;
  j["l2_error"] = r.l2_error;
  j["linf_error"] = r.linf_error;
  j["error_location"] = r.error_location;
  j["convergence_order"] = r.convergence_order ? nlohmann::ordered_json(*r.convergence_order) : nullptr;
  return j;
}

}  // namespace burgers
