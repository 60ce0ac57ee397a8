#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "hermfock/spaces.hpp"
#include "hermfock/suite.hpp"
#include "hermfock/transforms.hpp"

namespace hermfock {

namespace {

using PointFn = std::function<cplx(cplx)>;

PointFn resolve(const GridRequest& r) {
  if (r.m < 0 || r.n < 0) throw ConfigError("grid indices m and n must be non-negative");
  if (!(r.s > 0.0 && r.s < 1.0)) throw ConfigError("s must lie in (0,1)");
  const SParam sp(r.s);
  const cplx w(r.w_re, r.w_im);
  const int m = r.m;
  const int n = r.n;

  if (r.fn == "psi") return [=](cplx z) { return psi(m, z, sp); };
  if (r.fn == "psi_mn") return [=](cplx z) { return psi_mn(m, n, z, sp); };
  if (r.fn == "kernel_K") return [=](cplx z) { return kernel_K(z, w, sp); };
  if (r.fn == "kernel_Kn") return [=](cplx z) { return kernel_Kn(n, z, w, sp); };
  if (r.fn == "weight_omega") return [=](cplx z) { return cplx(weight_omega(z, sp)); };
  if (r.fn == "kernel_B") return [=, t = r.t](cplx z) { return kernel_B(t, z, sp); };
  if (r.fn == "kernel_S") return [=, x = r.x](cplx z) { return kernel_S_closed(n, x, z, sp); };
  throw ConfigError("unknown grid function: " + r.fn);
}

// snprintf with %.17g never localises the decimal point differently from
// the "C" locale unless the program calls setlocale, which we do not.
void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

const std::vector<std::string>& grid_functions() {
  static const std::vector<std::string> names = {"psi",          "psi_mn",   "kernel_K", "kernel_Kn",
                                                 "weight_omega", "kernel_B", "kernel_S"};
  return names;
}

std::string grid_csv(const GridRequest& request) {
  const GridSpec& g = request.grid;
  if (g.nx < 1 || g.ny < 1) throw ConfigError("grid needs nx >= 1 and ny >= 1");
  const PointFn f = resolve(request);

  auto coord = [](double lo, double hi, int count, int i) {
    return count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  };

  std::string out = "x,y,re,im,abs\n";
  for (int j = 0; j < g.ny; ++j) {
    const double y = coord(g.y0, g.y1, g.ny, j);
    for (int i = 0; i < g.nx; ++i) {
      const double x = coord(g.x0, g.x1, g.nx, i);
      const cplx v = f(cplx(x, y));
      append_number(out, x);
      out += ',';
      append_number(out, y);
      out += ',';
      append_number(out, v.real());
      out += ',';
      append_number(out, v.imag());
      out += ',';
      append_number(out, std::abs(v));
      out += '\n';
    }
  }
  return out;
}

void emit_grid(const GridRequest& request, const std::string& path) {
  const std::string text = grid_csv(request);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
  if (!file.flush()) throw std::runtime_error("failed writing " + path);
}

}  // namespace hermfock
