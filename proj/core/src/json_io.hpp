#pragma once

// JSON conversion kept out of the public headers.

#include <cmath>

#include <json.hpp>

#include "hermfock/report.hpp"

namespace hermfock::detail {

inline nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

inline nlohmann::ordered_json to_json(const ParamMap& params) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) {
    std::visit([&](const auto& v) { out[key] = v; }, value);
  }
  return out;
}

inline nlohmann::ordered_json to_json(const CheckReport& r, bool include_timing) {
  nlohmann::ordered_json out;
  out["name"] = r.name;
  out["params"] = to_json(r.params);
  out["max_abs_error"] = number_or_null(r.max_abs_error);
  out["tolerance"] = r.tolerance;
  out["passed"] = r.passed;
  if (include_timing) out["wall_time_ms"] = r.wall_time_ms;
  out["exploratory"] = r.exploratory;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace hermfock::detail
