#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermfock/report.hpp"

namespace hermfock {

/// Raised by SuiteConfig::validate and by the grid exporter for bad input.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every suite name run_suite understands, in canonical order.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::vector<double> s_values{0.3, 0.5, 0.7};
  int max_m = 12;
  int max_n = 4;
  int quad_order_1d = 128;
  int quad_order_2d = 96;
  /// Per-check overrides of the default tolerance, keyed by check name.
  std::map<std::string, double> tolerances;
  /// Suites to run. Empty runs nothing.
  std::vector<std::string> suites;
  std::uint64_t seed = 20240611;
  int series_terms = 80;
  std::string output_path;
  std::string output_format = "json";
  /// Worker threads; 0 means hardware concurrency.
  int threads = 0;

  /// Throws ConfigError describing the first invalid field.
  void validate() const;
};

/// Default tolerance of a check, or 0 if the name is unknown.
double default_tolerance(const std::string& check_name);
/// Override if configured, else default.
double tolerance_for(const SuiteConfig& config, const std::string& check_name);
/// Names of all checks with a default tolerance.
std::vector<std::string> known_checks();

/// Runs the selected suites. Validates first; individual numerical failures
/// are recorded in their reports and never abort the run. The result is
/// sorted by check name, then params.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

/// {"suite": [...], "config": {...}, "checks": [...], "passed": bool}.
std::string suite_report_json(const SuiteConfig& config, const std::vector<CheckReport>& reports,
                              bool include_timing = true);

/// Function grids for plotting. fn is one of psi, psi_mn, kernel_K,
/// kernel_Kn, weight_omega, kernel_B, kernel_S.
struct GridSpec {
  double x0 = -1.0;
  double y0 = -1.0;
  double x1 = 1.0;
  double y1 = 1.0;
  int nx = 3;
  int ny = 3;
};

struct GridRequest {
  std::string fn;
  GridSpec grid;
  double s = 0.5;
  int m = 0;
  int n = 0;
  double w_re = 0.0;  ///< fixed second point for kernel_K / kernel_Kn
  double w_im = 0.0;
  double t = 0.0;  ///< fixed real point for kernel_B
  double x = 0.0;  ///< fixed real point for kernel_S
};

const std::vector<std::string>& grid_functions();

/// CSV text with header x,y,re,im,abs and one row per grid point (x fastest).
/// Throws ConfigError for unknown functions or bad grids.
std::string grid_csv(const GridRequest& request);

/// Writes grid_csv to path; throws std::runtime_error if the file cannot be written.
void emit_grid(const GridRequest& request, const std::string& path);

}  // namespace hermfock
