#pragma once

// Check registry shared by the suite runner and the per-suite task builders.

#include <chrono>
#include <complex>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hermfock/report.hpp"
#include "hermfock/sparam.hpp"
#include "hermfock/suite.hpp"

namespace hermfock::detail {

/// A unit of work; returns one or more reports. Tasks are independent and
/// may run on any thread.
using CheckTask = std::function<std::vector<CheckReport>()>;

void add_hermite_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks);
void add_mehler_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks);
void add_gram_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks);
void add_kernel_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks);
void add_reproducing_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks);
void add_transform_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks);
void add_eigen_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks);
void add_exploratory_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks);

/// Tracks the largest deviation seen; NaN is sticky so a broken value can
/// never hide behind a later finite one.
class MaxError {
 public:
  void add(double e) {
    if (std::isnan(e) || std::isnan(value_)) {
      value_ = std::numeric_limits<double>::quiet_NaN();
    } else if (e > value_) {
      value_ = e;
    }
  }
  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// Runs body(MaxError&) and packages the outcome. Exceptions become a NaN
/// error with the message in the note.
template <class Body>
CheckReport run_check(const SuiteConfig& cfg, std::string name, ParamMap params, Body&& body,
                      bool exploratory = false) {
  CheckReport report;
  report.name = std::move(name);
  report.params = std::move(params);
  report.tolerance = tolerance_for(cfg, report.name);
  report.exploratory = exploratory;
  const auto start = std::chrono::steady_clock::now();
  MaxError err;
  try {
    body(err, report);
    report.max_abs_error = err.value();
  } catch (const std::exception& e) {
    report.max_abs_error = std::numeric_limits<double>::quiet_NaN();
    report.note = std::string("exception: ") + e.what();
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.settle();
  return report;
}

inline ParamMap s_param(double s) { return {{"s", s}}; }

/// Points of an nx-by-ny grid over [lo, hi]^2, optionally restricted to |z| <= radius.
std::vector<std::complex<double>> square_grid(double lo, double hi, int per_axis,
                                              double radius = std::numeric_limits<double>::infinity());

}  // namespace hermfock::detail
