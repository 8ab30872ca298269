#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"

using namespace burgers;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "burgers");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

OutputTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  return OutputTable::read_csv(in);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("burgers_test_" + std::to_string(::getpid()) + "_" + name);
}

int exit_status_of(const std::string& cmd) {
  const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST(Table, CsvAndJsonRoundTrip) {
  OutputTable t({"T", "Z", "V"});
  t.metadata.command = "reference";
  t.metadata.parameters = {{"s", "4"}};
  t.add_row({"1", "1", "-4/5"});
  t.add_row({"1", "2", "-12/13"});
  EXPECT_EQ(t.csv(), "T,Z,V\n1,1,-4/5\n1,2,-12/13\n");
  EXPECT_EQ(OutputTable::from_json(t.to_json()), t);
  auto back = parse_csv(t.csv());
  EXPECT_EQ(back.column("V"), t.column("V"));
  EXPECT_THROW(t.add_row({"1"}), DomainError);
  EXPECT_THROW((void)t.column("W"), DomainError);
}

TEST(Svg, DeterministicAndBreaksOnNan) {
  PlotSeries s{"V", {0, 1, 2, 3}, {0, 1, std::numeric_limits<double>::quiet_NaN(), 2}};
  PlotOptions o;
  o.title = "a < b";
  const auto a = render_svg({s}, o), b = render_svg({s}, o);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("a &lt; b"), std::string::npos);
  EXPECT_NE(a.find(kVersion), std::string::npos);
  std::size_t polylines = 0;
  for (std::size_t p = a.find("<polyline"); p != std::string::npos; p = a.find("<polyline", p + 1)) ++polylines;
  EXPECT_EQ(polylines, 2u);
}

TEST(Svg, GroupedSeries) {
  OutputTable t({"T", "Z", "V"});
  t.add_row({"0", "-1", "1"});
  t.add_row({"0", "1", "-1"});
  t.add_row({"1", "-1", "2/3"});
  t.add_row({"1", "1", "-2/3"});
  const auto series = table_series(t, "Z", {"V"}, std::string("T"));
  ASSERT_EQ(series.size(), 2u);
  EXPECT_EQ(series[1].label, "T=1");
  EXPECT_NEAR(series[1].y[0], 2.0 / 3.0, 1e-15);
}

TEST(Cli, ReferenceExactS2) {
  const auto r = run({"reference", "--s", "2", "--t", "1", "--zmin", "1", "--zmax", "1", "--n", "1", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "T,Z,V\n1,1,-2/3\n");
}

TEST(Cli, ReferenceExactOutputParsesBack) {
  const auto r = run({"reference", "--s", "10", "--t", "0,1/2,7/5", "--zmin", "-3", "--zmax", "3", "--n", "13",
                      "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse_csv(r.out);
  ASSERT_EQ(t.rows(), 39u);
  const ViscousSolution sol(10);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const auto T = exact::parse(t.column("T")[i]), Z = exact::parse(t.column("Z")[i]);
    const auto V = exact::parse(t.column("V")[i]);
    EXPECT_EQ(V, sol.value(T, Z));
    EXPECT_EQ(exact::to_string(V), t.column("V")[i]);
  }
}

TEST(Cli, ReferenceAtTimeZeroIsInitialData) {
  const auto r = run({"reference", "--s", "6", "--t", "0", "--zmin", "-8", "--zmax", "8", "--n", "33", "--exact"});
  ASSERT_EQ(r.code, 0);
  const auto t = parse_csv(r.out);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const auto Z = exact::parse(t.column("Z")[i]);
    EXPECT_EQ(exact::parse(t.column("V")[i]), -2 * Z / (1 + Z * Z));
  }
}

TEST(Cli, ReferenceDecimalAndFloatPathsAgree) {
  const std::vector<std::string> base{"reference", "--s", "100", "--t", "1", "--n", "321", "--digits", "9"};
  auto exact_args = base, float_args = base;
  float_args.push_back("--float");
  const auto a = run(exact_args), b = run(float_args);
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  const auto ta = parse_csv(a.out), tb = parse_csv(b.out);
  ASSERT_EQ(ta.rows(), 321u);
  for (std::size_t i = 0; i < ta.rows(); ++i) {
    EXPECT_NEAR(std::stod(ta.column("V")[i]), std::stod(tb.column("V")[i]), 2e-9);
  }
  EXPECT_EQ(ta.column("V")[0].size(), std::string("0.000000000").size());
}

TEST(Cli, JobsDoNotChangeOutput) {
  const auto a = run({"reference", "--s", "20", "--t", "0.3,2", "--n", "101"});
  const auto b = run({"reference", "--s", "20", "--t", "0.3,2", "--n", "101", "--jobs", "4"});
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"slope", "--s", "10,20", "--n", "21", "--compare"});
  const auto d = run({"slope", "--s", "10,20", "--n", "21", "--compare", "--jobs", "3"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, ReferenceJsonMetadata) {
  const auto r = run({"reference", "--s", "4", "--t", "1", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["metadata"]["command"], "reference");
  EXPECT_EQ(j["metadata"]["parameters"]["s"], "4");
  EXPECT_EQ(j["metadata"]["version"], kVersion);
  EXPECT_EQ(OutputTable::from_json(j).to_json(), j);
}

TEST(Cli, InviscidBranches) {
  const auto r = run({"inviscid", "--t", "1", "--zmin", "-0.1", "--zmax", "0.1", "--n", "3", "--branches"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse_csv(r.out);
  for (const auto& n : t.column("n_branches")) EXPECT_EQ(n, "3");

  const auto far = parse_csv(run({"inviscid", "--t", "1", "--zmin", "-4", "--zmax", "-4", "--n", "1", "--branches"}).out);
  EXPECT_EQ(far.column("n_branches")[0], "1");
  EXPECT_EQ(far.column("branch_2")[0], "nan");

  const auto init = parse_csv(run({"inviscid", "--t", "0", "--zmin", "-2", "--zmax", "2", "--n", "5"}).out);
  for (std::size_t i = 0; i < init.rows(); ++i) {
    const double Z = std::stod(init.column("Z")[i]);
    EXPECT_NEAR(std::stod(init.column("V")[i]), -2 * Z / (1 + Z * Z), 1e-12);
  }
}

TEST(Cli, SlopeCompare) {
  const auto r = run({"slope", "--s", "4", "--tmin", "0", "--tmax", "1", "--n", "5", "--compare"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse_csv(r.out);
  EXPECT_EQ(t.column("exact")[0], "-2.000000000000");
  EXPECT_EQ(t.column("regime")[2], "0");
  EXPECT_EQ(t.column("regime")[4], "1");
  EXPECT_NEAR(std::stod(t.column("exact")[4]), -20.0 / 11.0, 1e-12);
  EXPECT_NEAR(std::stod(t.column("hypergeometric")[4]), -20.0 / 11.0, 1e-10);
  EXPECT_EQ(t.column("hypergeometric")[0], "nan");
  EXPECT_EQ(t.column("asymptotic")[4], "nan");
}

TEST(Cli, CriticalTime) {
  const auto r = run({"critical-time", "--s", "100", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = OutputTable::from_json(nlohmann::ordered_json::parse(r.out));
  EXPECT_NEAR(std::stod(t.column("Tc_numeric")[0]), 1.03, 0.01);
  EXPECT_EQ(t.column("hessian_positive")[0], "1");
}

TEST(Cli, VerifyQuickPassesAndFaultFails) {
  const auto ok = run({"verify"});
  EXPECT_EQ(ok.code, cli::kOk) << ok.err;
  EXPECT_TRUE(nlohmann::json::parse(ok.out)["passed"].get<bool>());

  const auto bad = run({"verify", "--inject-fault", "heat-recurrence"});
  EXPECT_EQ(bad.code, cli::kVerificationFailed);
  EXPECT_NE(bad.err.find("heat_equation_recurrence"), std::string::npos);
  const auto j = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_FALSE(j["checks"][0]["passed"].get<bool>());
}

TEST(Cli, BenchmarkFromConfigWithOverride) {
  const auto cfg = temp_path("bench.cfg");
  std::ofstream(cfg) << "A = 10\nnz = 401\nt_end = 1\ns = 10\n";
  const auto r = run({"benchmark", "--config", cfg.string(), "--s", "2"});
  std::filesystem::remove(cfg);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["s"], 2);
  EXPECT_LE(j["linf_error"].get<double>(), 1e-3);
  EXPECT_TRUE(j["convergence_order"].is_null());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"reference"}).code, cli::kUsage);
  EXPECT_EQ(run({"reference", "--s", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"reference", "--s", "4", "--t", "-1"}).code, cli::kUsage);
  EXPECT_EQ(run({"reference", "--s", "4", "--exact", "--float"}).code, cli::kUsage);
  EXPECT_EQ(run({"reference", "--s", "4", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"benchmark", "--config", "/nonexistent/bench.cfg"}).code, cli::kUsage);
  EXPECT_EQ(run({"benchmark", "--dt", "1"}).code, cli::kNumericalFailure);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, BinaryExitStatus) {
  const std::string exe = BURGERS_CLI_PATH;
  EXPECT_EQ(exit_status_of(exe + " reference --s 2 --n 3"), 0);
  EXPECT_EQ(exit_status_of(exe + " reference --s 5"), 1);
  EXPECT_EQ(exit_status_of(exe + " verify --inject-fault heat-recurrence"), 2);
  EXPECT_EQ(exit_status_of(exe + " benchmark --dt 1"), 3);
}

TEST(Cli, PlotFromCsvAndJson) {
  const auto csv = temp_path("ref.csv"), json = temp_path("ref.json");
  const auto svg1 = temp_path("a.svg"), svg2 = temp_path("b.svg");
  ASSERT_EQ(run({"reference", "--s", "10", "--t", "0,0.5,1", "--n", "81", "--out", csv.string()}).code, 0);
  ASSERT_EQ(run({"reference", "--s", "10", "--t", "0,0.5,1", "--n", "81", "--format", "json", "--out", json.string()}).code,
            0);
  ASSERT_EQ(run({"plot", "--in", csv.string(), "--out", svg1.string(), "--group", "T"}).code, 0);
  ASSERT_EQ(run({"plot", "--in", json.string(), "--out", svg2.string(), "--group", "T"}).code, 0);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream f(p);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const std::string a = slurp(svg1);
  EXPECT_NE(a.find("T=0.500000000000"), std::string::npos);
  // The JSON input carries the command name as the default title; the CSV does not.
  EXPECT_EQ(a.find("reference"), std::string::npos);
  EXPECT_NE(slurp(svg2).find("reference"), std::string::npos);
  EXPECT_EQ(run({"plot", "--in", csv.string(), "--out", svg1.string(), "--y", "W"}).code, cli::kUsage);
  for (const auto& p : {csv, json, svg1, svg2}) std::filesystem::remove(p);
}

TEST(Cli, DeterministicOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"reference", "--s", "30", "--n", "41", "--format", "json"},
        std::vector<std::string>{"inviscid", "--t", "1", "--branches", "--n", "41"},
        std::vector<std::string>{"benchmark", "--nz", "101"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
