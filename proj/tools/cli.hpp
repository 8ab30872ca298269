#pragma once

// `burgers` command-line front end. run_cli() is separate from main() so the
// tests can drive every subcommand in-process.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "burgers/burgers.hpp"

namespace burgers::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kNumericalFailure = 3 };

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be written
/// to per-index slots so the output order does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      for (std::size_t i = j; i < n; i += jobs) fn(i);
    });
  }
}

/// n evenly spaced exact rationals from lo to hi inclusive.
inline std::vector<ExactRational> linspace(const ExactRational& lo, const ExactRational& hi, long n) {
  if (n < 1) throw DomainError("number of points must be at least 1");
  if (n == 1) return {lo};
  std::vector<ExactRational> out;
  out.reserve(static_cast<std::size_t>(n));
  const ExactRational step = (hi - lo) / (n - 1);
  for (long i = 0; i < n; ++i) out.push_back(lo + step * i);
  return out;
}

inline std::vector<ExactRational> parse_list(const std::vector<std::string>& items) {
  std::vector<ExactRational> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (!piece.empty()) out.push_back(exact::parse(piece));
    }
  }
  return out;
}

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
  int digits = 12;
};

inline void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "Write to this file instead of stdout");
  cmd->add_option("--digits", o.digits, "Digits after the decimal point (round half to even)")
      ->check(CLI::Range(0, 200));
}

inline void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "' for writing");
  f << text;
}

inline void emit(const OutputTable& table, const OutputOptions& o, std::ostream& out) {
  emit_text(o.format == "json" ? table.to_json().dump(2) + "\n" : table.csv(), o.out_path, out);
}

inline std::string join(const std::vector<ExactRational>& v) {
  std::string s;
  for (const auto& q : v) s += (s.empty() ? "" : ",") + exact::to_string(q);
  return s;
}

// ---------------------------------------------------------------- reference

struct ReferenceArgs {
  long s = 10;
  std::vector<std::string> times{"0", "1/2", "1"};
  std::string zmin = "-8", zmax = "8";
  long n = 321;
  bool exact_output = false;
  bool float_path = false;
  unsigned jobs = 1;
  OutputOptions out;
};

inline OutputTable cmd_reference(const ReferenceArgs& a) {
  const auto times = parse_list(a.times);
  if (times.empty()) throw DomainError("no times given");
  const auto zs = linspace(exact::parse(a.zmin), exact::parse(a.zmax), a.n);
  OutputTable table({"T", "Z", "V"});
  table.metadata.command = "reference";
  table.metadata.parameters = {{"s", std::to_string(a.s)},     {"t", join(times)},
                               {"zmin", a.zmin},                {"zmax", a.zmax},
                               {"n", std::to_string(a.n)},      {"mode", a.float_path ? "float" : "exact"},
                               {"digits", std::to_string(a.out.digits)}};
  const std::size_t nz = zs.size();
  std::vector<std::vector<std::string>> rows(times.size() * nz);
  auto render = [&](const ExactRational& q) {
    return a.exact_output ? exact::to_string(q) : exact::to_decimal(q, a.out.digits);
  };

  if (a.float_path) {
    const FastViscous fast(a.s);
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
      const auto profile = fast.at_time(exact::to_double(times[ti]));
      parallel_for(nz, a.jobs, [&](std::size_t zi) {
        const double v = profile(exact::to_double(zs[zi])).V;
        rows[ti * nz + zi] = {exact::to_decimal(times[ti], a.out.digits), exact::to_decimal(zs[zi], a.out.digits),
                              exact::to_decimal(v, a.out.digits)};
      });
    }
  } else {
    const ViscousSolution sol(a.s);
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
      detail::require_nonnegative_time(times[ti]);
      const auto coeffs = w_coefficients_at(sol.w(), times[ti]);
      parallel_for(nz, a.jobs, [&](std::size_t zi) {
        const WValues w = eval_w_derivatives(coeffs, zs[zi]);
        const ExactRational v = exact::make(-2, a.s) * w.W_Z / w.W;
        rows[ti * nz + zi] = {render(times[ti]), render(zs[zi]), render(v)};
      });
    }
  }
  for (auto& r : rows) table.add_row(std::move(r));
  return table;
}

// ----------------------------------------------------------------- inviscid

struct InviscidArgs {
  std::vector<std::string> times{"0", "1/2", "1"};
  std::string zmin = "-4", zmax = "4";
  long n = 321;
  bool branches = false;
  unsigned jobs = 1;
  OutputOptions out;
};

inline OutputTable cmd_inviscid(const InviscidArgs& a) {
  const auto times = parse_list(a.times);
  if (times.empty()) throw DomainError("no times given");
  const auto zs = linspace(exact::parse(a.zmin), exact::parse(a.zmax), a.n);
  std::vector<std::string> names{"T", "Z", "V"};
  if (a.branches) {
    for (const char* c : {"n_branches", "branch_1", "branch_2", "branch_3", "left_limit", "right_limit"}) {
      names.emplace_back(c);
    }
  }
  OutputTable table(names);
  table.metadata.command = "inviscid";
  table.metadata.parameters = {{"t", join(times)}, {"zmin", a.zmin}, {"zmax", a.zmax}, {"n", std::to_string(a.n)},
                               {"branches", a.branches ? "1" : "0"}, {"digits", std::to_string(a.out.digits)}};
  const std::size_t nz = zs.size();
  std::vector<std::vector<std::string>> rows(times.size() * nz);
  const int d = a.out.digits;
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    const double T = exact::to_double(times[ti]);
    parallel_for(nz, a.jobs, [&](std::size_t zi) {
      const auto smp = eval_inviscid(T, exact::to_double(zs[zi]));
      std::vector<std::string> row{exact::to_decimal(times[ti], d), exact::to_decimal(zs[zi], d),
                                   exact::to_decimal(smp.weak_value, d)};
      if (a.branches) {
        row.push_back(std::to_string(smp.branches.size()));
        for (std::size_t b = 0; b < 3; ++b) {
          row.push_back(b < smp.branches.size() ? exact::to_decimal(smp.branches[b], d) : "nan");
        }
        row.push_back(exact::to_decimal(smp.left_limit, d));
        row.push_back(exact::to_decimal(smp.right_limit, d));
      }
      rows[ti * nz + zi] = std::move(row);
    });
  }
  for (auto& r : rows) table.add_row(std::move(r));
  return table;
}

// -------------------------------------------------------------------- slope

struct SlopeArgs {
  std::vector<long> s_values{10, 100};
  std::string tmin = "0", tmax = "4";
  long n = 81;
  bool compare = false;
  unsigned jobs = 1;
  OutputOptions out;
};

inline int regime_code(Regime r) { return r == Regime::pre_tipping ? -1 : (r == Regime::tipping ? 0 : 1); }

inline OutputTable cmd_slope(const SlopeArgs& a) {
  const auto ts = linspace(exact::parse(a.tmin), exact::parse(a.tmax), a.n);
  std::vector<std::string> names{"s", "T", "exact"};
  if (a.compare) {
    for (const char* c : {"hypergeometric", "asymptotic", "inviscid", "regime", "abs_error", "rel_error"}) {
      names.emplace_back(c);
    }
  }
  OutputTable table(names);
  table.metadata.command = "slope";
  std::string s_list;
  for (long s : a.s_values) s_list += (s_list.empty() ? "" : ",") + std::to_string(s);
  table.metadata.parameters = {{"s", s_list},     {"tmin", a.tmin}, {"tmax", a.tmax}, {"n", std::to_string(a.n)},
                               {"compare", a.compare ? "1" : "0"}, {"digits", std::to_string(a.out.digits)}};
  const int d = a.out.digits;
  const std::string nan = "nan";
  std::vector<std::vector<std::string>> rows(a.s_values.size() * ts.size());
  for (std::size_t si = 0; si < a.s_values.size(); ++si) {
    const long s = a.s_values[si];
    const OriginSlope slope(s);
    parallel_for(ts.size(), a.jobs, [&](std::size_t ti) {
      const ExactRational& T = ts[ti];
      detail::require_nonnegative_time(T);
      const ExactRational ex = slope(T);
      std::vector<std::string> row{std::to_string(s), exact::to_decimal(T, d), exact::to_decimal(ex, d)};
      if (a.compare) {
        const double Td = exact::to_double(T);
        std::string hyp = nan;
        if (Td > 0.0) {
          try {
            hyp = exact::to_decimal(slope_at_origin_hyp(s, Td), d);
          } catch (const NumericalError&) {
          }
        }
        const SlopeReport rep = make_slope_report(s, T);
        const Regime reg = regime_of(T);
        std::string inv = nan;
        if (reg != Regime::post_tipping) inv = exact::to_decimal(inviscid_slope_origin(Td), d);
        row.push_back(hyp);
        row.push_back(rep.asym_slope ? exact::to_decimal(*rep.asym_slope, d) : nan);
        row.push_back(inv);
        row.push_back(std::to_string(regime_code(reg)));
        row.push_back(rep.abs_error ? exact::to_decimal(*rep.abs_error, d) : nan);
        row.push_back(rep.rel_error ? exact::to_decimal(*rep.rel_error, d) : nan);
      }
      rows[si * ts.size() + ti] = std::move(row);
    });
  }
  for (auto& r : rows) table.add_row(std::move(r));
  return table;
}

// ------------------------------------------------------------ critical-time

struct CriticalTimeArgs {
  std::vector<long> s_values{40, 80, 100, 160};
  bool mixed = true;
  unsigned jobs = 1;
  OutputOptions out;
};

inline OutputTable cmd_critical_time(const CriticalTimeArgs& a) {
  OutputTable table({"s", "Tc_numeric", "Tc_asym", "min_slope_numeric", "min_slope_asym", "hessian_zz_numeric",
                     "hessian_zz_exact", "hessian_zz_asym", "slope_tt_numeric", "mixed_derivative",
                     "hessian_positive"});
  table.metadata.command = "critical-time";
  std::string s_list;
  for (long s : a.s_values) s_list += (s_list.empty() ? "" : ",") + std::to_string(s);
  table.metadata.parameters = {{"s", s_list}, {"mixed", a.mixed ? "1" : "0"}, {"digits", std::to_string(a.out.digits)}};
  std::vector<ExtremumReport> reports(a.s_values.size());
  CriticalTimeOptions opt;
  opt.mixed_derivative = a.mixed;
  parallel_for(a.s_values.size(), a.jobs, [&](std::size_t i) { reports[i] = find_critical_time(a.s_values[i], opt); });
  const int d = a.out.digits;
  for (const auto& r : reports) {
    table.add_row({std::to_string(r.s), exact::to_decimal(r.Tc_numeric, d), exact::to_decimal(r.Tc_asym, d),
                   exact::to_decimal(r.min_slope_numeric, d), exact::to_decimal(r.min_slope_asym, d),
                   exact::to_decimal(r.hessian_zz_numeric, d), exact::to_decimal(r.hessian_zz_exact, d),
                   exact::to_decimal(r.hessian_zz_asym, d), exact::to_decimal(r.slope_tt_numeric, d),
                   r.mixed_derivative_numeric ? exact::to_decimal(*r.mixed_derivative_numeric, d) : "nan",
                   r.hessian_positive ? "1" : "0"});
  }
  return table;
}

// ------------------------------------------------------------------- driver

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact rational reference solutions of the viscous Burgers equation", "burgers"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  ReferenceArgs ref;
  auto* c_ref = app.add_subcommand("reference", "Viscous solution V(s, T, Z) on a grid");
  c_ref->add_option("--s", ref.s, "Even Reynolds-like number")->required();
  c_ref->add_option("--t", ref.times, "Times (comma separated; rationals or decimals)");
  c_ref->add_option("--zmin", ref.zmin, "Left end of the Z range");
  c_ref->add_option("--zmax", ref.zmax, "Right end of the Z range");
  c_ref->add_option("--n", ref.n, "Number of Z points")->check(CLI::PositiveNumber);
  auto* f_exact = c_ref->add_flag("--exact", ref.exact_output, "Print exact values as p/q");
  auto* f_float = c_ref->add_flag("--float", ref.float_path, "Approximate double-precision evaluation");
  f_exact->excludes(f_float);
  c_ref->add_option("--jobs", ref.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_output_flags(c_ref, ref.out);

  InviscidArgs inv;
  auto* c_inv = app.add_subcommand("inviscid", "Inviscid weak solution and characteristic branches");
  c_inv->add_option("--t", inv.times, "Times (comma separated)");
  c_inv->add_option("--zmin", inv.zmin, "Left end of the Z range");
  c_inv->add_option("--zmax", inv.zmax, "Right end of the Z range");
  c_inv->add_option("--n", inv.n, "Number of Z points")->check(CLI::PositiveNumber);
  c_inv->add_flag("--branches", inv.branches, "Also print every real branch and the one-sided limits");
  c_inv->add_option("--jobs", inv.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_output_flags(c_inv, inv.out);

  SlopeArgs slp;
  auto* c_slope = app.add_subcommand("slope", "Slope dV/dZ at the origin over time");
  c_slope->add_option("--s", slp.s_values, "Even s values")->delimiter(',');
  c_slope->add_option("--tmin", slp.tmin, "First time");
  c_slope->add_option("--tmax", slp.tmax, "Last time");
  c_slope->add_option("--n", slp.n, "Number of times")->check(CLI::PositiveNumber);
  c_slope->add_flag("--compare", slp.compare, "Add hypergeometric, asymptotic and inviscid columns");
  c_slope->add_option("--jobs", slp.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_output_flags(c_slope, slp.out);

  CriticalTimeArgs crit;
  bool no_mixed = false;
  auto* c_crit = app.add_subcommand("critical-time", "Time and depth of the steepest gradient at the origin");
  c_crit->add_option("--s", crit.s_values, "Even s values (>= 4)")->delimiter(',');
  c_crit->add_flag("--no-mixed", no_mixed, "Skip the mixed-derivative check (needs the full W)");
  c_crit->add_option("--jobs", crit.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_output_flags(c_crit, crit.out);

  std::string level = "quick";
  std::string fault;
  std::string verify_out;
  auto* c_verify = app.add_subcommand("verify", "Run the invariant suites and print a JSON report");
  c_verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  c_verify->add_option("--inject-fault", fault, "Fault injection for testing the suite")
      ->check(CLI::IsMember({"heat-recurrence"}));
  c_verify->add_option("--out", verify_out, "Write the report to this file");

  std::string config_path;
  BenchmarkConfig bench;
  std::string scheme = "central";
  bool refine = false;
  std::string bench_out;
  auto* c_bench = app.add_subcommand("benchmark", "Finite-difference solver scored against the exact solution");
  c_bench->add_option("--config", config_path, "key = value file (A, nz, dt, t_end, s, scheme)");
  auto* o_A = c_bench->add_option("--A", bench.spec.A, "Half-width of the domain");
  auto* o_nz = c_bench->add_option("--nz", bench.spec.nz, "Grid points");
  auto* o_dt = c_bench->add_option("--dt", bench.spec.dt, "Time step (0 = largest stable)");
  auto* o_t = c_bench->add_option("--t-end", bench.spec.t_end, "Final time");
  auto* o_s = c_bench->add_option("--s", bench.s, "Even Reynolds-like number");
  auto* o_scheme =
      c_bench->add_option("--scheme", scheme, "central or upwind")->check(CLI::IsMember({"central", "upwind"}));
  c_bench->add_flag("--refine", refine, "Also run the halved grid and report the observed order");
  c_bench->add_option("--out", bench_out, "Write JSON to this file");

  std::string plot_in, plot_out, plot_x = "Z", plot_group, plot_title;
  std::vector<std::string> plot_y{"V"};
  auto* c_plot = app.add_subcommand("plot", "Render a CSV or JSON table as an SVG line plot");
  c_plot->add_option("--in", plot_in, "Input table (.csv or .json)")->required();
  c_plot->add_option("--out", plot_out, "Output SVG")->required();
  c_plot->add_option("--x", plot_x, "X column");
  c_plot->add_option("--y", plot_y, "Y column(s)")->delimiter(',');
  c_plot->add_option("--group", plot_group, "Column whose values split the data into curves");
  c_plot->add_option("--title", plot_title, "Plot title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_ref) {
      emit(cmd_reference(ref), ref.out, out);
    } else if (*c_inv) {
      emit(cmd_inviscid(inv), inv.out, out);
    } else if (*c_slope) {
      emit(cmd_slope(slp), slp.out, out);
    } else if (*c_crit) {
      crit.mixed = !no_mixed;
      emit(cmd_critical_time(crit), crit.out, out);
    } else if (*c_verify) {
      VerifyOptions opt;
      opt.level = level == "full" ? VerifyLevel::full : VerifyLevel::quick;
      opt.perturb_w_coefficient = fault == "heat-recurrence";
      const VerifyReport report = run_verification(opt);
      emit_text(report.to_json().dump(2) + "\n", verify_out, out);
      if (!report.passed()) {
        for (const auto& c : report.checks) {
          if (!c.passed) err << "verification failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
        }
        return kVerificationFailed;
      }
    } else if (*c_bench) {
      BenchmarkConfig cfg;
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw DomainError("cannot open config '" + config_path + "'");
        cfg = parse_benchmark_config(f);
      }
      if (*o_A) cfg.spec.A = bench.spec.A;
      if (*o_nz) cfg.spec.nz = bench.spec.nz;
      if (*o_dt) cfg.spec.dt = bench.spec.dt;
      if (*o_t) cfg.spec.t_end = bench.spec.t_end;
      if (*o_s) cfg.s = bench.s;
      if (*o_scheme) cfg.spec.scheme = parse_scheme(scheme);
      validate(cfg.spec, cfg.s);
      const BenchmarkResult r = refine ? run_refinement(cfg.spec, cfg.s) : run_benchmark(cfg.spec, cfg.s);
      emit_text(to_json(r).dump(2) + "\n", bench_out, out);
    } else if (*c_plot) {
      std::ifstream f(plot_in);
      if (!f) throw DomainError("cannot open '" + plot_in + "'");
      const bool is_json = plot_in.size() >= 5 && plot_in.substr(plot_in.size() - 5) == ".json";
      const OutputTable table =
          is_json ? OutputTable::from_json(nlohmann::ordered_json::parse(f)) : OutputTable::read_csv(f);
      std::optional<std::string> group;
      if (!plot_group.empty()) group = plot_group;
      PlotOptions popt;
      popt.title = plot_title.empty() ? table.metadata.command : plot_title;
      popt.x_label = plot_x;
      popt.y_label = plot_y.size() == 1 ? plot_y.front() : "";
      emit_text(render_svg(table_series(table, plot_x, plot_y, group), popt), plot_out, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace burgers::cli
