#include "hermfock/spaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hermfock {

namespace {

using std::numbers::pi;

void require_index(int m, const char* what) {
  if (m < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

// ((1-s)/(pi sqrt s))^{1/2}
double psi_norm(const SParam& sp) {
  const double s = sp.s();
  return std::sqrt((1.0 - s) / (pi * std::sqrt(s)));
}

// (1-s)/(1+s)
double psi_ratio(const SParam& sp) { return (1.0 - sp.s()) / (1.0 + sp.s()); }

double factorial(int n) { return std::tgamma(n + 1.0); }

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return std::round(b);
}

QuadExponent gaussian_zz(cplx coeff) {
  QuadExponent q;
  q.zz = coeff;
  return q;
}

// Number of trailing terms that must all be negligible before a kernel series
// stops early; basis values vanish at isolated points (odd m at z = 0).
constexpr int kQuietRun = 4;
constexpr double kNegligibleTerm = 1e-14;

}  // namespace

QuadExponent omega_exponent(const SParam& sp) {
  QuadExponent q;
  q.zz = sp.alpha();
  q.bb = sp.alpha();
  q.mix = -sp.nu();
  return q;
}

double weight_omega(cplx z, const SParam& sp) {
  const double x = z.real();
  const double y = z.imag();
  // 2 alpha (x^2 - y^2) - nu (x^2 + y^2) = s x^2 - y^2 / s
  return std::exp(2.0 * sp.alpha() * (x * x - y * y) - sp.nu() * (x * x + y * y));
}

QuadExponent m_alpha_exponent(const SParam& sp, MSign sign) {
  return gaussian_zz(static_cast<double>(static_cast<int>(sign)) * sp.alpha());
}

cplx m_alpha_factor(cplx z, const SParam& sp, MSign sign) {
  return std::exp(static_cast<double>(static_cast<int>(sign)) * sp.alpha() * z * z);
}

std::vector<cplx> psi_poly_seq(int max_m, cplx z, const SParam& sp) {
  require_index(max_m, "psi");
  auto h = hermite_normalized_seq(max_m, z);
  const double root_ratio = std::sqrt(psi_ratio(sp));
  double scale = psi_norm(sp);
  for (auto& v : h) {
    v *= scale;
    scale *= root_ratio;
  }
  return h;
}

std::vector<cplx> psi_seq(int max_m, cplx z, const SParam& sp) {
  auto out = psi_poly_seq(max_m, z, sp);
  const cplx gauss = std::exp(-0.5 * z * z);
  for (auto& v : out) v *= gauss;
  return out;
}

cplx psi(int m, cplx z, const SParam& sp) { return psi_seq(m, z, sp).back(); }

ExpPoly psi_exppoly(int m, const SParam& sp) {
  require_index(m, "psi_exppoly");
  const double scale = psi_norm(sp) * std::pow(psi_ratio(sp), 0.5 * m) /
                       std::sqrt(std::pow(2.0, m) * factorial(m));
  return {scale * hermite_bipoly(m), gaussian_zz(-0.5)};
}

std::vector<cplx> phi_seq(int max_m, cplx z, const SParam& sp) {
  require_index(max_m, "phi");
  const double nu = sp.nu();
  std::vector<cplx> out(static_cast<std::size_t>(max_m) + 1);
  out[0] = std::sqrt(nu / pi) * std::exp(-sp.alpha() * z * z);
  for (int m = 0; m < max_m; ++m) out[m + 1] = out[m] * std::sqrt(nu / (m + 1)) * z;
  return out;
}

cplx phi(int m, cplx z, const SParam& sp) { return phi_seq(m, z, sp).back(); }

ExpPoly phi_exppoly(int m, const SParam& sp) {
  require_index(m, "phi_exppoly");
  const double scale = std::pow(sp.nu(), 0.5 * (m + 1)) / std::sqrt(pi * factorial(m));
  return {BiPoly::monomial(m, 0, scale), gaussian_zz(-sp.alpha())};
}

cplx psi_tilde(int m, cplx z, const SParam& sp) {
  require_index(m, "psi_tilde");
  const auto h = hermite_normalized_seq(m, z);
  return psi_norm(sp) * std::pow(psi_ratio(sp), 0.5 * m) *
         std::exp((sp.alpha() - 0.5) * z * z) * h.back();
}

ExpPoly psi_tilde_exppoly(int m, const SParam& sp) {
  return psi_exppoly(m, sp).times_exp(m_alpha_exponent(sp, MSign::plus));
}

ExpPoly psi_mn_exppoly(int m, int n, const SParam& sp) {
  require_index(m, "psi_mn_exppoly");
  require_index(n, "psi_mn_exppoly");
  if (m > kMaxSymbolicM || n > kMaxSymbolicN) {
    throw std::invalid_argument("psi_mn_exppoly: (m, n) beyond symbolic limits (" +
                                std::to_string(kMaxSymbolicM) + ", " +
                                std::to_string(kMaxSymbolicN) + ")");
  }
  const double nu = sp.nu();
  const double scale = std::sqrt((1.0 - sp.s()) /
                                 (pi * std::pow(nu, n) * factorial(n) * std::sqrt(sp.s()))) *
                       std::pow(psi_ratio(sp), 0.5 * m) /
                       std::sqrt(std::pow(2.0, m) * factorial(m));
  // alpha - 1/2 = (1-s)^2 / (4s)
  const OperatorParams creation(nu, sp.alpha() - 0.5);
  return {scale * nabla_power(hermite_bipoly(m), creation, n), gaussian_zz(-0.5)};
}

std::vector<cplx> psi_mn_poly_seq(int max_m, int n, cplx z, const SParam& sp) {
  require_index(max_m, "psi_mn");
  require_index(n, "psi_mn");
  const double nu = sp.nu();
  const double gamma = sp.alpha() - 0.5;
  // nabla^n_{nu,gamma} H_m = sum_j C(n,j) (-1)^j I_{n-j} H_m^{(j)}, with
  // I_k = I^{nu,gamma}_k(z, zbar | 0) and H_m^{(j)} = 2^j m!/(m-j)! H_{m-j}.
  std::vector<cplx> i_vals(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) i_vals[k] = i_poly_eval(k, nu, gamma, 0.0, z);
  const auto h = hermite_normalized_seq(max_m, z);

  const double root_ratio = std::sqrt(psi_ratio(sp));
  double scale = psi_norm(sp) / std::sqrt(std::pow(nu, n) * factorial(n));

  std::vector<cplx> out(static_cast<std::size_t>(max_m) + 1);
  for (int m = 0; m <= max_m; ++m) {
    cplx acc = 0.0;
    double falling = 1.0;  // m!/(m-j)!
    for (int j = 0; j <= std::min(n, m); ++j) {
      if (j > 0) falling *= (m - j + 1);
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      acc += sign * binomial(n, j) * i_vals[n - j] * std::pow(2.0, 0.5 * j) *
             std::sqrt(falling) * h[m - j];
    }
    out[m] = scale * acc;
    scale *= root_ratio;
  }
  return out;
}

std::vector<cplx> psi_mn_seq(int max_m, int n, cplx z, const SParam& sp) {
  auto out = psi_mn_poly_seq(max_m, n, z, sp);
  const cplx gauss = std::exp(-0.5 * z * z);
  for (auto& v : out) v *= gauss;
  return out;
}

cplx psi_mn(int m, int n, cplx z, const SParam& sp) { return psi_mn_seq(m, n, z, sp).back(); }

cplx kernel_K(cplx z, cplx w, const SParam& sp) {
  const cplx wb = std::conj(w);
  return sp.nu() / pi * std::exp(-sp.alpha() * (z * z + wb * wb) + sp.nu() * z * wb);
}

cplx kernel_Kn(int n, cplx z, cplx w, const SParam& sp) {
  require_index(n, "kernel_Kn");
  const double nu = sp.nu();
  const cplx wb = std::conj(w);
  const cplx hnn = complex_hermite_rodrigues(n, n, nu).eval(z - w);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return nu / pi * sign / (factorial(n) * std::pow(nu, n)) *
         std::exp(nu * z * wb - sp.alpha() * (z * z + wb * wb)) * hnn;
}

ExpPoly kernel_Kn_section(int n, cplx w, const SParam& sp) {
  require_index(n, "kernel_Kn_section");
  const double nu = sp.nu();
  const cplx wb = std::conj(w);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  BiPoly poly = complex_hermite_rodrigues(n, n, nu).shifted(w);
  poly *= nu / pi * sign / (factorial(n) * std::pow(nu, n));
  QuadExponent q;
  q.zz = -sp.alpha();
  q.z_lin = nu * wb;
  q.c0 = -sp.alpha() * wb * wb;
  return {std::move(poly), q};
}

cplx fock_kernel(cplx z, cplx w, double nu) { return nu / pi * std::exp(nu * z * std::conj(w)); }

KernelFn rkhs_conjugate(KernelFn kernel, ExponentFn g) {
  return [kernel = std::move(kernel), g = std::move(g)](cplx z, cplx w) {
    return std::exp(g(z)) * kernel(z, w) * std::exp(std::conj(g(w)));
  };
}

namespace {

template <class Seq>
SeriesValue truncated_sum(const Seq& a, const Seq& b) {
  cplx sum = 0.0;
  int quiet = 0;
  int used = 0;
  double prev = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    const cplx term = a[m] * std::conj(b[m]);
    sum += term;
    used = static_cast<int>(m) + 1;
    const double mag = std::abs(term);
    quiet = (mag < kNegligibleTerm && (m == 0 || mag <= prev + kNegligibleTerm)) ? quiet + 1 : 0;
    prev = mag;
    if (quiet >= kQuietRun) break;
  }
  return {sum, used};
}

}  // namespace

SeriesValue kernel_Kn_series(int n, cplx z, cplx w, const SParam& sp, int max_terms) {
  require_index(max_terms, "kernel_Kn_series");
  return truncated_sum(psi_mn_seq(max_terms, n, z, sp), psi_mn_seq(max_terms, n, w, sp));
}

SeriesValue kernel_K_phi_series(cplx z, cplx w, const SParam& sp, int max_terms) {
  require_index(max_terms, "kernel_K_phi_series");
  return truncated_sum(phi_seq(max_terms, z, sp), phi_seq(max_terms, w, sp));
}

}  // namespace hermfock
