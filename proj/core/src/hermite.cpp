#include "hermfock/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hermfock {

namespace {

void require_degree(int m, const char* what) {
  if (m < 0) {
    throw std::invalid_argument(std::string(what) + ": negative degree " + std::to_string(m));
  }
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("Mehler parameter must lie in (0,1), got " +
                                std::to_string(lambda));
  }
}

}  // namespace

HermiteSeq hermite_seq(int max_degree, cplx z) {
  require_degree(max_degree, "hermite_seq");
  HermiteSeq seq;
  seq.max_degree = max_degree;
  seq.values.resize(static_cast<std::size_t>(max_degree) + 1);
  seq.values[0] = 1.0;
  if (max_degree >= 1) seq.values[1] = 2.0 * z;
  for (int m = 1; m < max_degree; ++m) {
    seq.values[m + 1] = 2.0 * z * seq.values[m] - 2.0 * m * seq.values[m - 1];
  }
  return seq;
}

cplx hermite_explicit(int m, cplx z) {
  require_degree(m, "hermite_explicit");
  // m!/(k!(m-2k)!) is an integer; build it in floating point term by term.
  cplx sum = 0.0;
  const cplx two_z = 2.0 * z;
  for (int k = 0; 2 * k <= m; ++k) {
    const double coeff = std::exp(std::lgamma(m + 1.0) - std::lgamma(k + 1.0) -
                                  std::lgamma(m - 2.0 * k + 1.0));
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::round(coeff) * std::pow(two_z, m - 2 * k);
  }
  return sum;
}

std::vector<cplx> hermite_normalized_seq(int max_degree, cplx z) {
  require_degree(max_degree, "hermite_normalized_seq");
  std::vector<cplx> h(static_cast<std::size_t>(max_degree) + 1);
  h[0] = 1.0;
  if (max_degree >= 1) h[1] = std::numbers::sqrt2 * z;
  for (int m = 1; m < max_degree; ++m) {
    h[m + 1] = std::sqrt(2.0 / (m + 1)) * z * h[m] - std::sqrt(double(m) / (m + 1)) * h[m - 1];
  }
  return h;
}

std::vector<double> phys_basis_f_seq(int max_degree, double t) {
  require_degree(max_degree, "phys_basis_f");
  // Hermite-function recurrence carries the Gaussian from the start, so no
  // intermediate overflows even when H_m(t) alone would.
  std::vector<double> f(static_cast<std::size_t>(max_degree) + 1);
  f[0] = std::exp(-0.5 * t * t) / std::sqrt(std::sqrt(std::numbers::pi));
  if (max_degree >= 1) f[1] = std::numbers::sqrt2 * t * f[0];
  for (int m = 1; m < max_degree; ++m) {
    f[m + 1] = std::sqrt(2.0 / (m + 1)) * t * f[m] - std::sqrt(double(m) / (m + 1)) * f[m - 1];
  }
  return f;
}

double phys_basis_f(int m, double t) { return phys_basis_f_seq(m, t).back(); }

std::vector<double> scaled_basis_g_seq(int max_degree, double x, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("scaled_basis_g: nu must be positive");
  const auto h = hermite_normalized_seq(max_degree, cplx(std::sqrt(nu) * x, 0.0));
  const double pre = std::sqrt(std::sqrt(nu / std::numbers::pi));
  std::vector<double> g(h.size());
  for (std::size_t m = 0; m < h.size(); ++m) g[m] = pre * h[m].real();
  return g;
}

double scaled_basis_g(int m, double x, double nu) { return scaled_basis_g_seq(m, x, nu).back(); }

cplx mehler_closed(double lambda, cplx t, cplx z) {
  require_lambda(lambda);
  const double l2 = lambda * lambda;
  const double denom = 1.0 - l2;
  return std::exp((-l2 * (t * t + z * z) + 2.0 * lambda * t * z) / denom) / std::sqrt(denom);
}

cplx mehler_series(double lambda, cplx t, cplx z, int terms) {
  require_lambda(lambda);
  require_degree(terms, "mehler_series");
  // lambda^m H_m(t) H_m(z) / (2^m m!) = lambda^m h_m(t) h_m(z) with normalized h.
  const auto ht = hermite_normalized_seq(terms, t);
  const auto hz = hermite_normalized_seq(terms, z);
  cplx sum = 0.0;
  double power = 1.0;
  for (int m = 0; m <= terms; ++m) {
    sum += power * ht[m] * hz[m];
    power *= lambda;
  }
  return sum;
}

}  // namespace hermfock
