#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "elgi/cli/commands.hpp"
#include "elgi/cli/result_table.hpp"
#include "elgi/cli/run_config.hpp"
#include "elgi/cli/svg.hpp"

using namespace elgi::cli;

namespace {

constexpr double kPi = std::numbers::pi;

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"elgi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return elgi::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("cli_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

int column_index(const ResultTable& table, const std::string& name) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    if (table.columns[i] == name) return static_cast<int>(i);
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_theta_grid: endpoints and errors") {
  const ThetaGrid grid = parse_theta_grid("0:3.14:5");
  const auto values = grid.values();
  REQUIRE(values.size() == 5);
  CHECK(values.front() == 0.0);
  CHECK(values.back() == 3.14);

  CHECK(parse_theta_grid("1.5:1.5:1").values() == std::vector<double>{1.5});
  CHECK_THROWS_AS(parse_theta_grid("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_theta_grid("a:b:c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_theta_grid("0:1:0"), std::invalid_argument);
}

TEST_CASE("format_number: 12 significant digits, locale independent") {
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-0.134222779391) == "-0.134222779391");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(4096.0) == "4096");
}

TEST_CASE("csv round trip preserves 12 significant digits") {
  RunConfig config;
  config.command = Command::kProbabilities;
  config.grid = ThetaGrid{0.0, 2.0 * kPi, 25};
  const CommandOutput out = run_probabilities(config);
  const std::string csv = write_csv(out.table);
  const ResultTable parsed = parse_csv(csv);
  REQUIRE(parsed.columns == out.table.columns);
  REQUIRE(parsed.rows.size() == out.table.rows.size());
  for (std::size_t r = 0; r < parsed.rows.size(); ++r) {
    for (std::size_t c = 0; c < parsed.rows[r].size(); ++c) {
      const double a = parsed.rows[r][c], b = out.table.rows[r][c];
      CHECK(std::abs(a - b) <= 5e-12 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("probabilities: pinned rows") {
  RunConfig config;
  config.command = Command::kProbabilities;
  config.theta = 0.0;
  const ResultTable zero = run_probabilities(config).table;
  CHECK(zero.rows[0][1] == doctest::Approx(0.5).epsilon(1e-12));   // p00
  CHECK(zero.rows[0][2] == doctest::Approx(0.0));                  // p01
  CHECK(zero.rows[0][4] == doctest::Approx(0.5).epsilon(1e-12));   // p11

  config.theta = kPi / 4.0;
  const ResultTable quarter = run_probabilities(config).table;
  CHECK(quarter.rows[0][1] == doctest::Approx(0.426777).epsilon(1e-6));
  CHECK(quarter.rows[0][2] == doctest::Approx(0.073223).epsilon(1e-5));

  config.theta = kPi / 2.0;
  const ResultTable half = run_probabilities(config).table;
  for (int c = 1; c <= 4; ++c) CHECK(half.rows[0][c] == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("sweep: pinned deficits and violation flags") {
  RunConfig config;
  config.command = Command::kSweep;
  config.grid = ThetaGrid{0.0, kPi, 5};
  const ResultTable table = run_sweep(config).table;
  REQUIRE(table.rows.size() == 5);
  CHECK(table.rows[0][1] == doctest::Approx(0.0));
  CHECK(table.rows[4][1] == doctest::Approx(2.0).epsilon(1e-10));

  config.grid.reset();
  config.theta = kPi / 4.0;
  const ResultTable single = run_sweep(config).table;
  CHECK(single.rows[0][1] == doctest::Approx(-0.134).epsilon(0.01));
  CHECK(single.rows[0][2] == 1.0);
}

TEST_CASE("joint3: marginal columns expose the (1,3) mismatch") {
  RunConfig config;
  config.command = Command::kJoint3;
  config.theta = kPi / 4.0;
  const ResultTable table = run_joint3(config).table;
  const int p13 = column_index(table, "p13_00");
  const int pp13 = column_index(table, "pp13_00");
  CHECK(table.rows[0][p13] == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(table.rows[0][pp13] == doctest::Approx(0.375).epsilon(1e-10));
  for (const char* pair : {"12", "23"}) {
    for (const char* cell : {"00", "01", "10", "11"}) {
      const int direct = column_index(table, std::string("p") + pair + "_" + cell);
      const int marginal = column_index(table, std::string("pp") + pair + "_" + cell);
      CHECK(std::abs(table.rows[0][direct] - table.rows[0][marginal]) < 1e-10);
    }
  }
}

TEST_CASE("feasibility: verdict columns across regimes") {
  RunConfig config;
  config.command = Command::kFeasibility;
  config.theta = kPi / 8.0;
  CHECK(run_feasibility(config).table.rows[0][1] == 0.0);
  config.theta = kPi / 2.0;
  CHECK(run_feasibility(config).table.rows[0][1] == 1.0);
  config.theta = 1e-6;
  CHECK(run_feasibility(config).table.rows[0][1] == 1.0);
}

TEST_CASE("cli run: deficit criterion surface") {
  TempFile out("deficit.csv");
  CHECK(run_cli({"deficit", "--n", "3", "--s", "0.5", "--theta", "0.7853981634", "--mode",
                 "analytic", "--out", out.path}) == 0);
  const ResultTable table = parse_csv(slurp(out.path));
  const int deficit_col = column_index(table, "deficit");
  CHECK(std::abs(table.rows[0][deficit_col] - (-0.134)) < 0.001);
}

TEST_CASE("cli run: error paths exit nonzero") {
  CHECK(run_cli({"deficit"}) != 0);                                      // theta missing
  CHECK(run_cli({"deficit", "--theta", "1", "--mode", "nope"}) != 0);    // bad mode
  CHECK(run_cli({"deficit", "--theta", "1", "--format", "svg"}) != 0);   // unsupported svg
  CHECK(run_cli({"sweep", "--theta", "1", "--theta-grid", "0:1:3"}) != 0);
  CHECK(run_cli({"sweep"}) != 0);                                        // no grid at all
  CHECK(run_cli({"sample", "--theta", "1", "--reps", "1"}) != 0);        // reps < 2
  CHECK(run_cli({"probabilities", "--theta", "1", "--out", "no/such/dir/x.csv"}) != 0);
  CHECK(run_cli({"unknowncmd"}) != 0);
}

TEST_CASE("cli run: json config file with flag precedence") {
  TempFile cfg("config.json");
  {
    std::ofstream file(cfg.path);
    file << R"({"theta": 0.7853981634, "mode": "analytic", "n": 3})";
  }
  TempFile out1("cfg_run1.csv");
  CHECK(run_cli({"deficit", "--config", cfg.path, "--out", out1.path}) == 0);
  const ResultTable from_config = parse_csv(slurp(out1.path));
  CHECK(std::abs(from_config.rows[0][column_index(from_config, "deficit")] - (-0.134)) < 0.001);

  // A command-line flag beats the config file.
  TempFile out2("cfg_run2.csv");
  CHECK(run_cli({"deficit", "--config", cfg.path, "--theta", "0", "--out", out2.path}) == 0);
  const ResultTable overridden = parse_csv(slurp(out2.path));
  CHECK(overridden.rows[0][column_index(overridden, "deficit")] == doctest::Approx(0.0));

  TempFile bad("bad_config.json");
  {
    std::ofstream file(bad.path);
    file << R"({"not_a_key": 1})";
  }
  CHECK(run_cli({"deficit", "--theta", "1", "--config", bad.path}) != 0);
}

TEST_CASE("cli run: ELGI_SEED env var acts as the default seed") {
  TempFile with_flag("seed_flag.csv");
  TempFile with_env("seed_env.csv");
  const std::vector<std::string> base{"sample", "--theta", "0.7853981634",
                                      "--shots", "512", "--reps", "4"};
  auto with = [&](std::vector<std::string> args, const std::string& out) {
    args.push_back("--out");
    args.push_back(out);
    return args;
  };
  auto flagged = with(base, with_flag.path);
  flagged.push_back("--seed");
  flagged.push_back("777");
  CHECK(run_cli(flagged) == 0);

  setenv("ELGI_SEED", "777", 1);
  CHECK(run_cli(with(base, with_env.path)) == 0);
  unsetenv("ELGI_SEED");
  CHECK(slurp(with_flag.path) == slurp(with_env.path));

  setenv("ELGI_SEED", "not-a-number", 1);
  CHECK(run_cli(with(base, with_env.path)) != 0);
  unsetenv("ELGI_SEED");
}

TEST_CASE("cli run: json document mirrors the csv columns") {
  TempFile out("doc.json");
  CHECK(run_cli({"sweep", "--theta-grid", "0:1:3", "--format", "json", "--out", out.path}) == 0);
  const nlohmann::json doc = nlohmann::json::parse(slurp(out.path));
  REQUIRE(doc.contains("config"));
  REQUIRE(doc.contains("rows"));
  CHECK(doc["config"]["command"] == "sweep");
  CHECK(doc["config"]["mode"] == "analytic");
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][0].contains("theta"));
  CHECK(doc["rows"][0].contains("deficit"));
  CHECK(doc["rows"][0].contains("violated"));
}

TEST_CASE("svg output is deterministic and self-contained") {
  RunConfig config;
  config.command = Command::kSweep;
  config.grid = ThetaGrid{0.0, kPi, 40};
  config.format = OutputFormat::kSvg;
  const std::string first = render_output(config);
  const std::string second = render_output(config);
  CHECK(first == second);
  CHECK(first.rfind("<svg", 0) == 0);
  CHECK(first.find("<polyline") != std::string::npos);
  CHECK(first.find("http://") == first.find("http://www.w3.org/2000/svg"));
  CHECK(first.find("href") == std::string::npos);
}

TEST_CASE("svg sample command is rejected, grid commands render") {
  RunConfig config;
  config.command = Command::kSample;
  config.theta = 1.0;
  config.shots = elgi::ShotConfig{64, 3, 1, 0.0};
  config.format = OutputFormat::kSvg;
  CHECK_THROWS_AS(render_output(config), std::invalid_argument);

  RunConfig feas;
  feas.command = Command::kFeasibility;
  feas.grid = ThetaGrid{0.1, 1.4, 8};
  feas.format = OutputFormat::kSvg;
  const std::string svg = render_output(feas);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("probabilities with shots: empirical values stay near the curve") {
  RunConfig config;
  config.command = Command::kProbabilities;
  config.grid = ThetaGrid{0.2, 2.8, 7};
  config.mode = elgi::MeasurementMode::kInrm;
  config.shots = elgi::ShotConfig{100000, 2, 11, 0.0};
  const ResultTable table = run_probabilities(config).table;
  for (const auto& row : table.rows) {
    const double theta = row[0];
    const double expected = std::cos(theta / 2.0) * std::cos(theta / 2.0) / 2.0;
    CHECK(std::abs(row[1] - expected) < 0.01);
  }
}

}  // TEST_SUITE
