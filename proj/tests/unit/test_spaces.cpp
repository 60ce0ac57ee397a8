#include <doctest.h>

#include "hermfock/spaces.hpp"
#include "oracles.hpp"

using namespace hermfock;

TEST_CASE("SParam constants") {
  const SParam sp(0.5);
  CHECK(sp.alpha() == doctest::Approx(0.625));
  CHECK(sp.nu() == doctest::Approx(0.75));
  CHECK_THROWS_AS(SParam(0.0), std::invalid_argument);
  CHECK_THROWS_AS(SParam(1.0), std::invalid_argument);
  CHECK_THROWS_AS(SParam(-0.2), std::invalid_argument);

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int i = 0; i < 200; ++i) {
    const SParam p(u(rng));
    CHECK(std::abs(p.alpha() * p.alpha() - p.nu() * p.nu() / 4 - 0.25) < 1e-14);
  }
}

TEST_CASE("weight omega") {
  const SParam sp(0.4);
  CHECK(weight_omega(0.0, sp) == 1.0);
  for (cplx z : oracle::random_points(2, 20, 2.0)) {
    const double want = std::exp(0.4 * z.real() * z.real() - z.imag() * z.imag() / 0.4);
    CHECK(weight_omega(z, sp) == doctest::Approx(want).epsilon(1e-13));
    CHECK(std::abs(omega_exponent(sp).eval(z) - std::log(want)) < 1e-12);
  }
}

TEST_CASE("psi against the defining formula") {
  for (double s : {0.3, 0.5, 0.7}) {
    const SParam sp(s);
    for (cplx z : oracle::random_points(4, 15, 2.0)) {
      const auto seq = psi_seq(12, z, sp);
      for (int m = 0; m <= 12; ++m) {
        const cplx want = oracle::psi(m, z, s);
        CHECK(oracle::rel_err(seq[m], want) < 1e-12);
        CHECK(oracle::rel_err(psi(m, z, sp), want) < 1e-12);
        CHECK(oracle::rel_err(psi_poly_seq(12, z, sp)[m] * std::exp(-z * z / 2.0), want) < 1e-12);
      }
      for (int m = 0; m <= 6; ++m) CHECK(oracle::rel_err(psi_exppoly(m, sp).eval(z), oracle::psi(m, z, s)) < 1e-12);
    }
  }
}

TEST_CASE("phi and psi_tilde formulas") {
  const SParam sp(0.6);
  for (cplx z : oracle::random_points(8, 10, 1.5)) {
    for (int m = 0; m <= 6; ++m) {
      const cplx want =
          std::pow(sp.nu(), (m + 1) / 2.0) / std::sqrt(oracle::pi * oracle::factorial(m)) * std::exp(-sp.alpha() * z * z) *
          std::pow(z, m);
      CHECK(oracle::rel_err(phi(m, z, sp), want) < 1e-13);
      CHECK(oracle::rel_err(phi_exppoly(m, sp).eval(z), want) < 1e-13);
      CHECK(oracle::rel_err(psi_tilde(m, z, sp), std::exp(sp.alpha() * z * z) * oracle::psi(m, z, 0.6)) < 1e-12);
      CHECK(oracle::rel_err(psi_tilde_exppoly(m, sp).eval(z), psi_tilde(m, z, sp)) < 1e-12);
    }
  }
}

TEST_CASE("polyanalytic basis: level 0, symbolic vs pointwise, polyanalyticity") {
  const SParam sp(0.45);
  for (cplx z : oracle::random_points(12, 10, 1.5)) {
    for (int m = 0; m <= 6; ++m) {
      CHECK(oracle::rel_err(psi_mn(m, 0, z, sp), oracle::psi(m, z, 0.45)) < 1e-12);
      for (int n = 0; n <= 3; ++n) {
        const cplx sym = psi_mn_exppoly(m, n, sp).eval(z);
        CHECK(oracle::rel_err(psi_mn(m, n, z, sp), sym) < 1e-11);
        CHECK(oracle::rel_err(psi_mn_seq(6, n, z, sp)[m], sym) < 1e-11);
      }
    }
  }
  // Level n is a polynomial of degree n in zbar once the Gaussian is removed.
  for (int n = 0; n <= 4; ++n) CHECK(psi_mn_exppoly(3, n, sp).poly().degree_zbar() == n);
  CHECK_THROWS_AS(psi_mn_exppoly(kMaxSymbolicM + 1, 0, sp), std::invalid_argument);
}

TEST_CASE("psi family is orthonormal under an independent quadrature") {
  // omega_s |psi|^2 decays like exp(-(1-s) x^2 - (1/s - 1) y^2).
  const double s = 0.5;
  const SParam sp(s);
  for (int m = 0; m <= 4; ++m) {
    for (int k = 0; k <= m; ++k) {
      const cplx ip = oracle::trapezoid_2d(
          [&](cplx z) { return oracle::psi(m, z, s) * std::conj(oracle::psi(k, z, s)) * weight_omega(z, sp); }, 9.0,
          240);
      CHECK(std::abs(ip - (m == k ? 1.0 : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("reproducing kernels") {
  const SParam sp(0.35);
  const double nu = sp.nu(), alpha = sp.alpha();
  const auto pts = oracle::random_points(21, 12, 1.5);
  for (cplx z : pts) {
    for (cplx w : pts) {
      const cplx want = nu / oracle::pi * std::exp(-alpha * (z * z + std::conj(w) * std::conj(w)) + nu * z * std::conj(w));
      CHECK(oracle::rel_err(kernel_K(z, w, sp), want) < 1e-13);
      CHECK(oracle::rel_err(kernel_Kn(0, z, w, sp), want) < 1e-13);
      for (int n = 0; n <= 3; ++n) {
        const cplx kn = nu / oracle::pi * std::pow(-1.0, n) / (oracle::factorial(n) * std::pow(nu, n)) *
                        std::exp(nu * z * std::conj(w) - alpha * (z * z + std::conj(w) * std::conj(w))) *
                        oracle::complex_hermite(n, n, nu, z - w);
        CHECK(oracle::rel_err(kernel_Kn(n, z, w, sp), kn) < 1e-12);
        CHECK(oracle::rel_err(kernel_Kn(n, w, z, sp), std::conj(kn)) < 1e-12);
        CHECK(oracle::rel_err(kernel_Kn_section(n, w, sp).eval(z), kn) < 1e-12);
      }
    }
    for (int n = 0; n <= 3; ++n) {
      const cplx diag = kernel_Kn(n, z, z, sp);
      CHECK(diag.real() > 0.0);
      CHECK(std::abs(diag.imag()) <= 1e-12 * diag.real());
    }
  }
}

TEST_CASE("K is the Fock kernel conjugated by exp(-alpha z^2)") {
  const SParam sp(0.6);
  const KernelFn conj_fock = rkhs_conjugate([&](cplx z, cplx w) { return fock_kernel(z, w, sp.nu()); },
                                            [&](cplx z) { return -sp.alpha() * z * z; });
  for (cplx z : oracle::random_points(5, 8, 1.5)) {
    for (cplx w : oracle::random_points(6, 8, 1.5)) CHECK(oracle::rel_err(conj_fock(z, w), kernel_K(z, w, sp)) < 1e-13);
  }
}

TEST_CASE("kernel series converge where the ratio allows") {
  for (double s : {0.5, 0.7}) {
    const SParam sp(s);
    const cplx z(1.0, -0.5), w(-0.5, 1.0);
    CHECK(std::abs(kernel_Kn_series(0, z, w, sp).value - kernel_K(z, w, sp)) < 1e-8);
    CHECK(std::abs(kernel_K_phi_series(z, w, sp).value - kernel_K(z, w, sp)) < 1e-8);
    for (int n = 1; n <= 3; ++n) CHECK(std::abs(kernel_Kn_series(n, z, w, sp).value - kernel_Kn(n, z, w, sp)) < 1e-7);
  }
  const auto early = kernel_Kn_series(0, 0.1, 0.1, SParam(0.7));
  CHECK(early.terms_used < kDefaultKernelTerms);
}
