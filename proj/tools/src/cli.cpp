#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hermfock/quadrature.hpp"
#include "hermfock/spaces.hpp"
#include "hermfock/suite.hpp"

namespace hfock {

namespace {

using hermfock::ConfigError;

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ConfigError("bad number for " + what + ": '" + text + "'");
  return v;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--tol expects name=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_double(item.substr(eq + 1), "--tol " + item.substr(0, eq));
  }
  return out;
}

hermfock::GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  if (parts.size() != 6) throw ConfigError("--grid expects x0,y0,x1,y1,nx,ny");
  hermfock::GridSpec g;
  g.x0 = parse_double(parts[0], "--grid x0");
  g.y0 = parse_double(parts[1], "--grid y0");
  g.x1 = parse_double(parts[2], "--grid x1");
  g.y1 = parse_double(parts[3], "--grid y1");
  const double nx = parse_double(parts[4], "--grid nx");
  const double ny = parse_double(parts[5], "--grid ny");
  if (nx != static_cast<int>(nx) || ny != static_cast<int>(ny)) throw ConfigError("--grid nx, ny must be integers");
  g.nx = static_cast<int>(nx);
  g.ny = static_cast<int>(ny);
  return g;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text).flush()) throw std::runtime_error("cannot write " + path);
}

struct VerifyOptions {
  hermfock::SuiteConfig config;
  std::vector<std::string> tol_items;
  bool no_timing = false;
};

int run_verify(VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  auto& cfg = opts.config;
  cfg.tolerances = parse_tolerances(opts.tol_items);
  if (cfg.suites.empty()) cfg.suites = hermfock::suite_names();
  cfg.validate();

  const auto reports = hermfock::run_suite(cfg);
  const bool ok = hermfock::overall_passed(reports);
  write_text(cfg.output_path, hermfock::suite_report_json(cfg, reports, !opts.no_timing), out);

  for (const auto& r : reports) {
    if (!r.passed && !r.exploratory) {
      err << "FAIL " << r.name << " [" << hermfock::format_params(r.params) << "] error=" << r.max_abs_error
          << " tol=" << r.tolerance << '\n';
    }
  }
  if (!cfg.output_path.empty()) {
    out << (ok ? "passed" : "failed") << ": " << reports.size() << " checks, report in " << cfg.output_path
        << '\n';
  }
  return ok ? 0 : 1;
}

struct GridOptions {
  hermfock::GridRequest request;
  std::string grid_text;
  std::string out_path;
};

int run_grid(GridOptions& opts, std::ostream& out) {
  if (!opts.grid_text.empty()) opts.request.grid = parse_grid(opts.grid_text);
  if (opts.out_path.empty()) {
    out << hermfock::grid_csv(opts.request);
  } else {
    hermfock::emit_grid(opts.request, opts.out_path);
  }
  return 0;
}

struct GramOptions {
  std::string family = "psi";
  double s = 0.5;
  int max_m = 12;
  int max_n = 4;
  int quad_2d = 96;
  std::vector<std::string> tol_items;
  std::string out_path;
};

// Gram matrix of one basis family in its own space, summarised as the
// deviation from the identity plus the diagonal.
int run_gram(const GramOptions& opts, std::ostream& out) {
  using namespace hermfock;
  if (!(opts.s > 0.0 && opts.s < 1.0)) throw ConfigError("s must lie in (0,1)");
  if (opts.quad_2d < kMinQuadOrder || opts.quad_2d > kMaxQuadOrder) {
    throw ConfigError("quadrature orders must lie in [1, 512]");
  }
  if (opts.max_m < 0 || opts.max_n < 0) throw ConfigError("max-m and max-n must be non-negative");
  const SParam sp(opts.s);

  std::vector<ComplexEnvelopedFn> family;
  std::string check;
  if (opts.family == "psi") {
    if (opts.max_m > 64) throw ConfigError("max-m must lie in [0, 64]");
    QuadExponent ex;
    ex.zz = -0.5;
    for (int m = 0; m <= opts.max_m; ++m) {
      family.push_back({[m, sp](cplx z) { return psi_poly_seq(m, z, sp)[m]; }, ex});
    }
    check = "psi_gram";
  } else if (opts.family == "psi_mn") {
    if (opts.max_m > kMaxSymbolicM || opts.max_n > kMaxSymbolicN) {
      throw ConfigError("psi_mn needs max-m <= " + std::to_string(kMaxSymbolicM) +
                        " and max-n <= " + std::to_string(kMaxSymbolicN));
    }
    for (int n = 0; n <= opts.max_n; ++n) {
      for (int m = 0; m <= opts.max_m; ++m) family.push_back(as_enveloped(psi_mn_exppoly(m, n, sp)));
    }
    check = "psi_mn_gram";
  } else if (opts.family == "phi") {
    if (opts.max_m > kMaxSymbolicM) throw ConfigError("phi needs max-m <= " + std::to_string(kMaxSymbolicM));
    for (int m = 0; m <= opts.max_m; ++m) family.push_back(as_enveloped(phi_exppoly(m, sp)));
    check = "phi_gram";
  } else {
    throw ConfigError("unknown family: " + opts.family + " (expected psi, psi_mn or phi)");
  }

  SuiteConfig tol_cfg;
  tol_cfg.tolerances = parse_tolerances(opts.tol_items);
  tol_cfg.validate();
  const double tol = tolerance_for(tol_cfg, check);

  const GramMatrix g = gram_Hs(family, sp, make_rule_2d(opts.quad_2d));
  const double dev = g.deviation_from_identity();

  nlohmann::ordered_json doc;
  doc["family"] = opts.family;
  doc["s"] = opts.s;
  doc["max_m"] = opts.max_m;
  if (opts.family == "psi_mn") doc["max_n"] = opts.max_n;
  doc["quad_order_2d"] = opts.quad_2d;
  doc["size"] = g.size;
  std::vector<double> diag;
  for (std::size_t i = 0; i < g.size; ++i) diag.push_back(g(i, i).real());
  doc["diagonal"] = diag;
  doc["deviation"] = dev;
  doc["tolerance"] = tol;
  doc["passed"] = dev <= tol;
  write_text(opts.out_path, doc.dump(2) + "\n", out);
  return dev <= tol ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for weighted complex Hermite polynomials and Fock-type spaces", "hfock"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run verification suites and emit a JSON report");
  v->add_option("--suite", verify.config.suites, "Suite to run (repeatable; default all)");
  v->add_option("--s", verify.config.s_values, "Deformation parameter in (0,1) (repeatable)");
  v->add_option("--max-m", verify.config.max_m, "Largest m");
  v->add_option("--max-n", verify.config.max_n, "Largest n");
  v->add_option("--quad-1d", verify.config.quad_order_1d, "1-D Gauss-Hermite order");
  v->add_option("--quad-2d", verify.config.quad_order_2d, "Per-axis order of the 2-D rule");
  v->add_option("--tol", verify.tol_items, "Tolerance override name=value (repeatable)");
  v->add_option("--seed", verify.config.seed, "Seed for random spot checks");
  v->add_option("--series-terms", verify.config.series_terms, "Truncation of kernel and Mehler series");
  v->add_option("--out", verify.config.output_path, "Report path (default stdout)");
  v->add_option("--format", verify.config.output_format, "Report format")->check(CLI::IsMember({"json"}));
  v->add_option("--threads", verify.config.threads, "Worker threads (0 = hardware)");
  v->add_flag("--no-timing", verify.no_timing, "Omit wall times so reports are byte-reproducible");

  GridOptions grid;
  auto* g = app.add_subcommand("grid", "Write a function grid as CSV");
  g->add_option("--fn", grid.request.fn, "Function id")->required()->check(CLI::IsMember(hermfock::grid_functions()));
  g->add_option("--s", grid.request.s, "Deformation parameter in (0,1)");
  g->add_option("--m", grid.request.m, "Index m");
  g->add_option("--n", grid.request.n, "Index n");
  g->add_option("--w-re", grid.request.w_re, "Re w for kernel_K, kernel_Kn");
  g->add_option("--w-im", grid.request.w_im, "Im w for kernel_K, kernel_Kn");
  g->add_option("--t", grid.request.t, "Fixed t for kernel_B");
  g->add_option("--x", grid.request.x, "Fixed x for kernel_S");
  g->add_option("--grid", grid.grid_text, "x0,y0,x1,y1,nx,ny (default -1,-1,1,1,3,3)");
  g->add_option("--out", grid.out_path, "CSV path (default stdout)");

  GramOptions gram;
  auto* gr = app.add_subcommand("gram", "Gram matrix of a basis family in its weighted space");
  gr->add_option("--family", gram.family, "psi, psi_mn or phi")->check(CLI::IsMember({"psi", "psi_mn", "phi"}));
  gr->add_option("--s", gram.s, "Deformation parameter in (0,1)");
  gr->add_option("--max-m", gram.max_m, "Largest m");
  gr->add_option("--max-n", gram.max_n, "Largest n (psi_mn only)");
  gr->add_option("--quad-2d", gram.quad_2d, "Per-axis order of the 2-D rule");
  gr->add_option("--tol", gram.tol_items, "Tolerance override name=value");
  gr->add_option("--out", gram.out_path, "JSON path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hfock: " << e.what() << '\n';
    return 2;
  }

  try {
    if (v->parsed()) return run_verify(verify, out, err);
    if (g->parsed()) return run_grid(grid, out);
    return run_gram(gram, out);
  } catch (const std::exception& e) {
    // Config errors, bad arguments caught by the library, unwritable paths.
    err << "hfock: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hfock
