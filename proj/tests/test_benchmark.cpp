#include <gtest/gtest.h>

#include <sstream>

#include "burgers/benchmark.hpp"

using namespace burgers;

TEST(Grid, ValidationAndStableStep) {
  GridSpec g;
  EXPECT_DOUBLE_EQ(g.dz(), 0.05);
  EXPECT_NO_THROW(validate(g, 2));
  GridSpec bad = g;
  bad.nz = 8;
  EXPECT_THROW(validate(bad, 2), DomainError);
  bad = g;
  bad.A = -1.0;
  EXPECT_THROW(validate(bad, 2), DomainError);
  EXPECT_THROW(validate(g, 3), DomainError);
  const double dt = stable_dt(g, 2, 1.0);
  EXPECT_LE(dt, kStabilitySafety * std::min(g.dz() * g.dz() * 2.0 / 2.0, g.dz() / 1.0) * (1 + 1e-12));
}

TEST(Grid, SymmetricPoints) {
  const auto z = grid_points(GridSpec{});
  ASSERT_EQ(z.size(), 401u);
  for (std::size_t i = 0; i < z.size(); ++i) EXPECT_EQ(z[i], -z[z.size() - 1 - i]);
  EXPECT_EQ(z[200], 0.0);
}

TEST(SolveFd, TinyEndTimeKeepsInitialData) {
  GridSpec g;
  g.t_end = 1e-12;
  const auto sol = solve_fd(g, 2);
  for (std::size_t i = 0; i < sol.Z.size(); ++i) {
    EXPECT_NEAR(sol.V[i], -2 * sol.Z[i] / (1 + sol.Z[i] * sol.Z[i]), 1e-10);
  }
}

TEST(SolveFd, StabilityAndNanGuards) {
  GridSpec g;
  g.dt = 0.5;
  EXPECT_THROW(solve_fd(g, 2), NumericalError);
}

TEST(SolveFd, AntisymmetricOnSymmetricGrid) {
  const auto sol = solve_fd(GridSpec{}, 10);
  for (std::size_t i = 0; i < sol.V.size(); ++i) EXPECT_NEAR(sol.V[i], -sol.V[sol.V.size() - 1 - i], 1e-13);
}

TEST(Benchmark, S2MatchesClosedForm) {
  const auto r = run_benchmark(GridSpec{}, 2);
  EXPECT_LE(r.linf_error, 1e-3);
  EXPECT_GE(r.l2_error, 0.0);
  // Score independently against -2Z/(1+T+Z^2).
  const auto sol = solve_fd(GridSpec{}, 2);
  double linf = 0.0;
  for (std::size_t i = 1; i + 1 < sol.Z.size(); ++i) {
    const double Z = sol.Z[i];
    linf = std::max(linf, std::fabs(sol.V[i] + 2 * Z / (1 + sol.t + Z * Z)));
  }
  EXPECT_NEAR(linf, r.linf_error, 1e-14);
}

TEST(Benchmark, RefinementOrder) {
  GridSpec g;
  g.nz = 201;
  const auto r = run_refinement(g, 10);
  ASSERT_TRUE(r.convergence_order.has_value());
  EXPECT_GE(*r.convergence_order, 1.8);
  EXPECT_LE(*r.convergence_order, 2.2);

  GridSpec u = g;
  u.scheme = Scheme::upwind;
  const auto ru = run_refinement(u, 10);
  EXPECT_NEAR(*ru.convergence_order, 1.0, 0.3);
}

TEST(Benchmark, CoarseToFineReducesError) {
  GridSpec coarse;
  coarse.nz = 101;
  GridSpec fine;
  fine.nz = 401;
  EXPECT_LT(run_benchmark(fine, 2).l2_error, run_benchmark(coarse, 2).l2_error);
}

TEST(Benchmark, HarderWithLargerS) {
  double prev = 0.0;
  for (long s : {10L, 20L, 40L}) {
    const double e = run_benchmark(GridSpec{}, s).linf_error;
    EXPECT_GT(e, prev) << "s=" << s;
    prev = e;
  }
}

TEST(Benchmark, ErrorPeaksNearOriginAtCriticalTime) {
  GridSpec g;
  g.t_end = 1.03;
  EXPECT_LE(std::fabs(run_benchmark(g, 100).error_location), 0.2);
}

TEST(Benchmark, BoundaryTraceStaysSmall) {
  for (long s : {2L, 10L, 100L}) {
    const ViscousSolution sol(s);
    for (int i = 0; i <= 40; ++i) {
      EXPECT_LE(std::fabs(exact::to_double(sol.value(ExactRational(i, 4), 10))), 0.25) << s;
    }
  }
}

TEST(Config, ParsesKeyValueLines) {
  std::istringstream in("# grid\nA = 8\nnz=201\n dt = 0.001 \nt_end = 0.5  # short run\ns = 10\nscheme = upwind\n\n");
  const auto cfg = parse_benchmark_config(in);
  EXPECT_DOUBLE_EQ(cfg.spec.A, 8.0);
  EXPECT_EQ(cfg.spec.nz, 201);
  EXPECT_DOUBLE_EQ(cfg.spec.dt, 0.001);
  EXPECT_DOUBLE_EQ(cfg.spec.t_end, 0.5);
  EXPECT_EQ(cfg.s, 10);
  EXPECT_EQ(cfg.spec.scheme, Scheme::upwind);
}

TEST(Config, RejectsMalformedInput) {
  for (const char* text : {"A 8\n", "nz = many\n", "colour = red\n", "scheme = spectral\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_benchmark_config(in), DomainError) << text;
  }
}

TEST(Json, HasAllFields) {
  GridSpec g;
  g.nz = 101;
  const auto j = to_json(run_refinement(g, 2));
  for (const char* key : {"s", "grid", "steps", "l2_error", "linf_error", "error_location", "convergence_order"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["grid"]["scheme"], "central");
}
