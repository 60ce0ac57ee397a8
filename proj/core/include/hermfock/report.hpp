#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace hermfock {

using ParamValue = std::variant<std::int64_t, double, std::string>;
using ParamMap = std::map<std::string, ParamValue>;

/// Outcome of one numerical check.
struct CheckReport {
  std::string name;
  ParamMap params;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double wall_time_ms = 0.0;
  /// Exploratory checks record evidence; they never gate the overall result.
  bool exploratory = false;
  std::string note;

  /// passed = (max_abs_error <= tolerance); a NaN error never passes.
  void settle() { passed = max_abs_error <= tolerance; }
};

/// Ordering used for report assembly: name, then params.
bool report_order(const CheckReport& a, const CheckReport& b);

/// Conjunction of passed over non-exploratory reports (true when empty).
bool overall_passed(const std::vector<CheckReport>& reports);

/// One JSON object per report; wall_time_ms is omitted when include_timing is
/// false so that two identical runs produce identical text.
std::string report_to_json(const CheckReport& report, bool include_timing = true);

/// Params rendered as "k=v,k=v" for human-readable summaries.
std::string format_params(const ParamMap& params);

}  // namespace hermfock
