#include "hermfock/suite.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "hermfock/quadrature.hpp"
#include "hermfock/spaces.hpp"
#include "json_io.hpp"
#include "suite_internal.hpp"

namespace hermfock {

namespace {

const std::map<std::string, double>& tolerance_table() {
  static const std::map<std::string, double> table = {
      // hermite
      {"hermite_cross_oracle", 1e-10},
      {"f_basis_gram", 1e-12},
      {"g_basis_gram", 1e-12},
      {"hprime_kampe_de_feriet", 1e-10},
      // mehler
      {"mehler", 1e-10},
      // gram
      {"psi_gram", 1e-10},
      {"psi_mn_gram", 1e-10},
      {"phi_gram", 1e-10},
      {"psi_tilde_gram", 1e-10},
      // kernels
      {"kernel_series_K", 1e-8},
      {"kernel_series_Kn", 1e-7},
      {"kernel_series_phi", 1e-8},
      {"kernel_B_series", 1e-9},
      {"kernel_Btilde_series", 1e-9},
      {"kernel_S_series", 1e-7},
      {"kernel_fock_conjugation", 1e-12},
      {"kernel_diagonal", 1e-12},
      // reproducing
      {"reproducing_K", 1e-6},
      {"reproducing_Kn", 1e-6},
      // transforms
      {"bs_basis", 1e-8},
      {"bs_isometry", 1e-7},
      {"bs_round_trip", 1e-6},
      {"bs_inverse_basis", 1e-7},
      {"btilde_basis", 1e-8},
      {"wn_basis", 1e-6},
      {"wn_round_trip", 1e-6},
      {"tkn_conjugation", 1e-8},
      {"tkn_creation", 1e-6},
      {"sn_basis", 1e-7},
      {"sn_isometry", 1e-6},
      {"standard_bn_gram", 1e-6},
      {"bprime_levels", 1e-5},
      // eigen
      {"rodrigues_nabla", 1e-12},
      {"delta_nu_eigen", 1e-12},
      {"alpha_nu_identity", 1e-14},
      {"rodrigues_conjugation", 1e-12},
      {"i_poly_recurrence", 1e-12},
      // exploratory
      {"hnn_identity_nabla", 1e-10},
      {"hnn_identity_exponential", 1e-10},
      {"hnn_identity_exponential_sign_flipped", 1e-10},
      {"hermite_nu_convention", 1e-6},
      {"n_independence", 1e-6},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hermite",     "gram",       "mehler",
                                                 "kernels",     "reproducing", "transforms",
                                                 "eigen",       "exploratory"};
  return names;
}

double default_tolerance(const std::string& check_name) {
  const auto& table = tolerance_table();
  const auto it = table.find(check_name);
  return it == table.end() ? 0.0 : it->second;
}

double tolerance_for(const SuiteConfig& config, const std::string& check_name) {
  const auto it = config.tolerances.find(check_name);
  return it == config.tolerances.end() ? default_tolerance(check_name) : it->second;
}

std::vector<std::string> known_checks() {
  std::vector<std::string> out;
  for (const auto& [name, tol] : tolerance_table()) out.push_back(name);
  return out;
}

void SuiteConfig::validate() const {
  for (double s : s_values) {
    if (!(s > 0.0 && s < 1.0)) throw ConfigError("s must lie in (0,1), got " + std::to_string(s));
  }
  if (max_m < 0 || max_m > 64) throw ConfigError("max-m must lie in [0, 64]");
  if (max_n < 0 || max_n > kMaxSymbolicN) {
    throw ConfigError("max-n must lie in [0, " + std::to_string(kMaxSymbolicN) + "]");
  }
  for (int q : {quad_order_1d, quad_order_2d}) {
    if (q < kMinQuadOrder || q > kMaxQuadOrder) {
      throw ConfigError("quadrature orders must lie in [1, 512]");
    }
  }
  if (series_terms < 1 || series_terms > 1000) throw ConfigError("series terms must lie in [1, 1000]");
  for (const auto& [name, tol] : tolerances) {
    if (default_tolerance(name) == 0.0) throw ConfigError("unknown check in --tol: " + name);
    if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("tolerance for " + name + " must be positive");
  }
  for (const auto& suite : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
      throw ConfigError("unknown suite: " + suite);
    }
  }
  if (output_format != "json") throw ConfigError("unsupported format: " + output_format);
  if (threads < 0) throw ConfigError("threads must be non-negative");
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  config.validate();
  using Builder = void (*)(const SuiteConfig&, std::vector<detail::CheckTask>&);
  static const std::map<std::string, Builder> builders = {
      {"hermite", detail::add_hermite_checks},
      {"gram", detail::add_gram_checks},
      {"mehler", detail::add_mehler_checks},
      {"kernels", detail::add_kernel_checks},
      {"reproducing", detail::add_reproducing_checks},
      {"transforms", detail::add_transform_checks},
      {"eigen", detail::add_eigen_checks},
      {"exploratory", detail::add_exploratory_checks},
  };

  std::vector<detail::CheckTask> tasks;
  std::vector<std::string> seen;
  for (const auto& suite : config.suites) {
    if (std::find(seen.begin(), seen.end(), suite) != seen.end()) continue;
    seen.push_back(suite);
    builders.at(suite)(config, tasks);
  }

  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(tasks.size(), config.threads > 0 ? static_cast<unsigned>(config.threads) : hw);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  std::vector<CheckReport> out;
  for (auto& batch : results) {
    for (auto& r : batch) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), report_order);
  return out;
}

std::string suite_report_json(const SuiteConfig& config, const std::vector<CheckReport>& reports,
                              bool include_timing) {
  nlohmann::ordered_json doc;
  doc["suite"] = config.suites;
  nlohmann::ordered_json cfg;
  cfg["s_values"] = config.s_values;
  cfg["max_m"] = config.max_m;
  cfg["max_n"] = config.max_n;
  cfg["quad_order_1d"] = config.quad_order_1d;
  cfg["quad_order_2d"] = config.quad_order_2d;
  cfg["series_terms"] = config.series_terms;
  cfg["seed"] = config.seed;
  nlohmann::ordered_json tol = nlohmann::ordered_json::object();
  for (const auto& [name, value] : config.tolerances) tol[name] = value;
  cfg["tolerances"] = tol;
  doc["config"] = cfg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : reports) checks.push_back(detail::to_json(r, include_timing));
  doc["checks"] = checks;
  doc["passed"] = overall_passed(reports);
  return doc.dump(2) + "\n";
}

namespace detail {

std::vector<std::complex<double>> square_grid(double lo, double hi, int per_axis, double radius) {
  std::vector<std::complex<double>> out;
  for (int i = 0; i < per_axis; ++i) {
    const double x = per_axis == 1 ? lo : lo + (hi - lo) * i / (per_axis - 1);
    for (int j = 0; j < per_axis; ++j) {
      const double y = per_axis == 1 ? lo : lo + (hi - lo) * j / (per_axis - 1);
      if (std::hypot(x, y) <= radius + 1e-12) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace detail

}  // namespace hermfock
