#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <limits>
#include <sstream>

#include "hermfock/report.hpp"
#include "hermfock/suite.hpp"
#include "oracles.hpp"

using namespace hermfock;
using oracle::cplx;

namespace {

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("settle: passed iff error within tolerance; NaN never passes") {
  CheckReport r;
  r.tolerance = 1e-8;
  r.max_abs_error = 1e-9;
  r.settle();
  CHECK(r.passed);
  r.max_abs_error = 1e-8;
  r.settle();
  CHECK(r.passed);
  r.max_abs_error = 2e-8;
  r.settle();
  CHECK_FALSE(r.passed);
  r.max_abs_error = std::numeric_limits<double>::quiet_NaN();
  r.settle();
  CHECK_FALSE(r.passed);
}

TEST_CASE("overall result ignores exploratory reports") {
  CheckReport ok{"a", {}, 0.0, 1.0, true, 0.0, false, ""};
  CheckReport bad_expl{"b", {}, 5.0, 1.0, false, 0.0, true, ""};
  CheckReport bad{"c", {}, 5.0, 1.0, false, 0.0, false, ""};
  CHECK(overall_passed({}));
  CHECK(overall_passed({ok, bad_expl}));
  CHECK_FALSE(overall_passed({ok, bad}));
}

TEST_CASE("report JSON carries every field") {
  CheckReport r{"mehler", {{"lambda", 0.5}, {"terms", std::int64_t{80}}, {"tag", std::string("x")}}, 1e-15, 1e-10,
                true, 3.5, false, ""};
  const auto j = nlohmann::json::parse(report_to_json(r));
  for (const char* key : {"name", "params", "max_abs_error", "tolerance", "passed", "wall_time_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["params"]["terms"] == 80);
  CHECK(j["params"]["tag"] == "x");
  CHECK_FALSE(nlohmann::json::parse(report_to_json(r, false)).contains("wall_time_ms"));
  CHECK(format_params(r.params) == "lambda=0.5,tag=x,terms=80");
}

TEST_CASE("reports sort by name, then params") {
  CheckReport a{"b", {{"s", 0.5}}, 0, 1, true, 0, false, ""};
  CheckReport b{"b", {{"s", 0.3}}, 0, 1, true, 0, false, ""};
  CheckReport c{"a", {{"s", 0.7}}, 0, 1, true, 0, false, ""};
  std::vector<CheckReport> v{a, b, c};
  std::sort(v.begin(), v.end(), report_order);
  CHECK(v[0].name == "a");
  CHECK(std::get<double>(v[1].params.at("s")) == 0.3);
}

TEST_CASE("configuration validation") {
  SuiteConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  auto expect_bad = [](auto mutate) {
    SuiteConfig c;
    mutate(c);
    CHECK_THROWS_AS(c.validate(), ConfigError);
    CHECK_THROWS_AS(run_suite(c), ConfigError);
  };
  expect_bad([](SuiteConfig& c) { c.s_values = {1.5}; });
  expect_bad([](SuiteConfig& c) { c.s_values = {0.0}; });
  expect_bad([](SuiteConfig& c) { c.quad_order_1d = 0; });
  expect_bad([](SuiteConfig& c) { c.quad_order_2d = 1000; });
  expect_bad([](SuiteConfig& c) { c.max_m = -1; });
  expect_bad([](SuiteConfig& c) { c.tolerances["mehler"] = -1.0; });
  expect_bad([](SuiteConfig& c) { c.tolerances["no_such_check"] = 1.0; });
  expect_bad([](SuiteConfig& c) { c.suites = {"nonsense"}; });
  expect_bad([](SuiteConfig& c) { c.output_format = "xml"; });
}

TEST_CASE("empty suite list gives an empty, successful report") {
  SuiteConfig cfg;
  const auto reports = run_suite(cfg);
  CHECK(reports.empty());
  CHECK(overall_passed(reports));
}

TEST_CASE("Mehler suite passes at its tolerance") {
  SuiteConfig cfg;
  cfg.suites = {"mehler"};
  cfg.s_values = {0.5};
  const auto reports = run_suite(cfg);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.passed);
    CHECK(r.max_abs_error <= 1e-10);
  }
}

TEST_CASE("psi Gram suite at s = 0.5") {
  SuiteConfig cfg;
  cfg.suites = {"gram"};
  cfg.s_values = {0.5};
  const auto reports = run_suite(cfg);
  bool found = false;
  for (const auto& r : reports) {
    if (r.name == "psi_gram") {
      found = true;
      CHECK(r.max_abs_error <= 1e-10);
    }
  }
  CHECK(found);
}

TEST_CASE("tolerance overrides apply") {
  SuiteConfig cfg;
  cfg.suites = {"mehler"};
  cfg.tolerances["mehler"] = 1e-300;
  const auto reports = run_suite(cfg);
  CHECK_FALSE(overall_passed(reports));
  CHECK(reports.front().tolerance == 1e-300);
}

TEST_CASE("runs are deterministic apart from timing") {
  SuiteConfig cfg;
  cfg.suites = {"hermite", "eigen", "mehler", "hermite"};
  cfg.threads = 2;
  const std::string a = suite_report_json(cfg, run_suite(cfg), false);
  cfg.threads = 1;
  const std::string b = suite_report_json(cfg, run_suite(cfg), false);
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  for (const char* key : {"suite", "config", "checks", "passed"}) CHECK(j.contains(key));
}

TEST_CASE("exploratory checks report but never gate") {
  SuiteConfig cfg;
  cfg.suites = {"exploratory"};
  cfg.s_values = {0.5};
  cfg.max_m = 2;
  cfg.max_n = 2;
  cfg.quad_order_1d = 48;
  cfg.quad_order_2d = 32;
  const auto reports = run_suite(cfg);
  bool some_failed = false;
  for (const auto& r : reports) {
    CHECK(r.exploratory);
    some_failed |= !r.passed;
  }
  CHECK(some_failed);  // the literal exponential identity does not hold
  CHECK(overall_passed(reports));
}

TEST_CASE("grid: omega on the unit square") {
  GridRequest req;
  req.fn = "weight_omega";
  const std::string csv = grid_csv(req);
  CHECK(csv.rfind("x,y,re,im,abs\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  const auto rows = parse_csv(csv);
  REQUIRE(rows.size() == 9);
  CHECK(rows[4][0] == 0.0);
  CHECK(rows[4][1] == 0.0);
  CHECK(rows[4][2] == 1.0);
  CHECK(rows[1][0] == 0.0);  // x varies fastest
  CHECK(rows[1][1] == -1.0);
}

TEST_CASE("grid: K(z, 0) = (nu/pi) exp(-alpha z^2)") {
  GridRequest req;
  req.fn = "kernel_K";
  req.s = 0.4;
  req.grid = {-1.0, -0.5, 1.0, 0.5, 5, 3};
  const oracle::S sp(0.4);
  for (const auto& row : parse_csv(grid_csv(req))) {
    const cplx z(row[0], row[1]);
    const cplx want = sp.nu / oracle::pi * std::exp(-sp.alpha * z * z);
    CHECK(std::abs(cplx(row[2], row[3]) - want) < 1e-14);
  }
}

TEST_CASE("grid: psi_1 has odd real part") {
  GridRequest req;
  req.fn = "psi";
  req.m = 1;
  req.grid = {-1.0, -1.0, 1.0, 1.0, 5, 5};
  const auto rows = parse_csv(grid_csv(req));
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i][2] == doctest::Approx(-rows[rows.size() - 1 - i][2]));
}

TEST_CASE("grid: every function id evaluates; bad requests are rejected") {
  for (const auto& fn : grid_functions()) {
    GridRequest req;
    req.fn = fn;
    req.n = 1;
    CHECK(parse_csv(grid_csv(req)).size() == 9);
  }
  GridRequest bad;
  bad.fn = "nope";
  CHECK_THROWS_AS(grid_csv(bad), ConfigError);
  bad.fn = "psi";
  bad.grid.nx = 0;
  CHECK_THROWS_AS(grid_csv(bad), ConfigError);
  GridRequest ok;
  ok.fn = "psi";
  CHECK_THROWS_AS(emit_grid(ok, "/nonexistent-dir/x/y.csv"), std::runtime_error);
}
