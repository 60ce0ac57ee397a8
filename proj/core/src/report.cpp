#include "hermfock/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "json_io.hpp"

namespace hermfock {

bool report_order(const CheckReport& a, const CheckReport& b) {
  return std::tie(a.name, a.params) < std::tie(b.name, b.params);
}

bool overall_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.exploratory || r.passed; });
}

std::string report_to_json(const CheckReport& report, bool include_timing) {
  return detail::to_json(report, include_timing).dump();
}

std::string format_params(const ParamMap& params) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out << ',';
    first = false;
    out << key << '=';
    std::visit([&out](const auto& v) { out << v; }, value);
  }
  return out.str();
}

}  // namespace hermfock
