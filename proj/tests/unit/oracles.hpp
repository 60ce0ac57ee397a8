#pragma once

// Reference computations written independently of the library: direct
// formulas, plain recurrences in long double, and trapezoid quadrature (which
// converges geometrically for smooth, rapidly decaying integrands).

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using std::numbers::pi;

inline double factorial(int n) { return std::tgamma(n + 1.0); }

inline double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

/// Physicists' Hermite polynomials by the textbook recurrence in long double.
inline std::vector<cplx> hermite(int max_m, cplx z) {
  using lc = std::complex<long double>;
  const lc x(z.real(), z.imag());
  std::vector<lc> h(static_cast<std::size_t>(max_m) + 1);
  h[0] = 1.0L;
  if (max_m >= 1) h[1] = 2.0L * x;
  for (int m = 1; m < max_m; ++m) h[m + 1] = 2.0L * x * h[m] - 2.0L * static_cast<long double>(m) * h[m - 1];
  std::vector<cplx> out;
  for (const auto& v : h) out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  return out;
}

inline cplx hermite_at(int m, cplx z) { return hermite(m, z)[m]; }

/// int_{-L}^{L} f(x) dx with n trapezoid panels.
inline cplx trapezoid(const std::function<cplx(double)>& f, double L, int n) {
  const double h = 2.0 * L / n;
  cplx sum = 0.5 * (f(-L) + f(L));
  for (int i = 1; i < n; ++i) sum += f(-L + i * h);
  return sum * h;
}

/// Integral over [-L, L]^2 of f(x + iy) with n panels per axis.
inline cplx trapezoid_2d(const std::function<cplx(cplx)>& f, double L, int n) {
  const double h = 2.0 * L / n;
  cplx sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double wx = (i == 0 || i == n) ? 0.5 : 1.0;
    for (int j = 0; j <= n; ++j) {
      const double wy = (j == 0 || j == n) ? 0.5 : 1.0;
      sum += wx * wy * f(cplx(-L + i * h, -L + j * h));
    }
  }
  return sum * h * h;
}

struct S {
  double s, alpha, nu;
  explicit S(double s_) : s(s_), alpha((1 + s_ * s_) / (4 * s_)), nu((1 - s_ * s_) / (2 * s_)) {}
};

/// psi^s_m from its defining normalization.
inline cplx psi(int m, cplx z, double s) {
  const double c = std::sqrt((1 - s) / (pi * std::sqrt(s))) * std::pow((1 - s) / (1 + s), m / 2.0) /
                   std::sqrt(std::pow(2.0, m) * factorial(m));
  return c * std::exp(-z * z / 2.0) * hermite_at(m, z);
}

/// H^nu_{m,n}(z, zbar) by its finite sum.
inline cplx complex_hermite(int m, int n, double nu, cplx z) {
  cplx sum = 0.0;
  for (int k = 0; k <= std::min(m, n); ++k) {
    sum += std::pow(-1.0, k) * factorial(k) * binomial(m, k) * binomial(n, k) * std::pow(nu, m + n - k) *
           std::pow(z, m - k) * std::pow(std::conj(z), n - k);
  }
  return sum;
}

inline std::vector<cplx> random_points(std::uint64_t seed, int count, double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<cplx> out;
  while (static_cast<int>(out.size()) < count) {
    const cplx z(u(rng), u(rng));
    if (std::abs(z) <= radius) out.push_back(z);
  }
  return out;
}

inline double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace oracle
