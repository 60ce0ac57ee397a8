#include <doctest.h>

#include "hermfock/hermite.hpp"
#include "hermfock/transforms.hpp"
#include "oracles.hpp"

using namespace hermfock;

namespace {

const std::vector<cplx>& test_points() {
  static const std::vector<cplx> pts{{0.0, 0.0}, {1.2, 0.0}, {-0.7, 0.9}, {0.3, -1.4}, {1.5, 1.0}};
  return pts;
}

}  // namespace

TEST_CASE("B_s kernel formula and its symmetry on the real line") {
  const double s = 0.4;
  const SParam sp(s);
  const double pref = std::sqrt((1 - s * s) / (2 * oracle::pi * s * std::sqrt(s * oracle::pi)));
  for (double t : {-1.0, 0.0, 0.5}) {
    for (cplx z : test_points()) {
      const cplx want = pref * std::exp(-t * t / (2 * s) - z * z / (2 * s) + std::sqrt(1 - s * s) * t * z / s);
      CHECK(oracle::rel_err(kernel_B(t, z, sp), want) < 1e-13);
    }
    for (double x : {-0.8, 0.9}) CHECK(oracle::rel_err(kernel_B(t, x, sp), kernel_B(x, t, sp)) < 1e-13);
  }
  CHECK(oracle::rel_err(kernel_Btilde(0.0, {0.4, 0.2}, sp), std::pow(s, 0.25) * kernel_B(0.0, {0.4, 0.2}, sp)) < 1e-14);
}

TEST_CASE("B_s maps Hermite functions to psi, Btilde to phi") {
  const auto& rule = gauss_hermite_cached(96);
  for (double s : {0.3, 0.6}) {
    const SParam sp(s);
    for (int m = 0; m <= 5; ++m) {
      for (cplx z : test_points()) {
        const TransformResult b = apply_Bs(f_enveloped(m), z, sp, rule);
        CHECK(std::abs(b.value - oracle::psi(m, z, s)) < 1e-9);
        CHECK(b.estimated_error >= 0.0);
        CHECK(b.estimated_error < 1e-8);
        CHECK(std::abs(apply_Btilde(f_enveloped(m), z, sp, rule).value - phi(m, z, sp)) < 1e-9);
      }
    }
  }
}

TEST_CASE("inverse B_s recovers Hermite functions") {
  const SParam sp(0.5);
  const auto rule = make_rule_2d(48);
  const std::vector<double> ts{-1.5, 0.0, 0.7};
  for (int m = 0; m <= 4; ++m) {
    const auto batch = apply_Bs_inverse(as_enveloped(psi_exppoly(m, sp)), ts, sp, rule);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK(std::abs(batch[i].value - phys_basis_f(m, ts[i])) < 1e-10);
      CHECK(std::abs(apply_Bs_inverse(psi_exppoly(m, sp), ts[i], sp, rule).value - batch[i].value) < 1e-12);
    }
  }
}

TEST_CASE("level transforms W_n and their inverse") {
  const SParam sp(0.5);
  const auto rule = make_rule_2d(48);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (cplx z : test_points()) {
        const cplx want = psi_mn(m, n, z, sp);
        CHECK(oracle::rel_err(apply_Wn(psi_exppoly(m, sp), n, z, sp, rule).value, want) < 1e-9);
        CHECK(oracle::rel_err(apply_Wn_inverse(psi_mn_exppoly(m, n, sp), n, z, sp, rule).value, psi(m, z, sp)) < 1e-9);
      }
    }
  }
}

TEST_CASE("closed coherent-state kernel") {
  const double s = 0.7;
  const SParam sp(s);
  const double nu = sp.nu();
  for (double x : {-1.0, 0.0, 0.8}) {
    for (cplx z : test_points()) {
      // S_0(x, z) = sum_m g_m(x) psi_m(z) = nu^{1/4} exp(nu x^2 / 2) B_s(sqrt(nu) x, z).
      const cplx via_b = std::pow(nu, 0.25) * std::exp(nu * x * x / 2) * kernel_B(std::sqrt(nu) * x, z, sp);
      CHECK(oracle::rel_err(kernel_S_closed(0, x, z, sp), via_b) < 1e-12);
      for (int n = 0; n <= 2; ++n) {
        const auto g = scaled_basis_g_seq(80, x, nu);
        const auto p = psi_mn_seq(80, n, z, sp);
        cplx sum = 0.0;
        for (int m = 0; m <= 80; ++m) sum += g[m] * p[m];
        CHECK(std::abs(sum - kernel_S_closed(n, x, z, sp)) < 1e-9);
      }
    }
  }
}

TEST_CASE("S_n maps g_m to psi_{m,n}") {
  const SParam sp(0.5);
  const auto& rule = gauss_hermite_cached(96);
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (cplx z : test_points()) {
        CHECK(std::abs(apply_Sn(g_enveloped(m, sp.nu()), n, z, sp, rule).value - psi_mn(m, n, z, sp)) < 1e-9);
      }
    }
  }
}

TEST_CASE("one-variable Hermite conventions") {
  const double nu = 0.8;
  const cplx u(0.6, 0.1);
  for (int n = 0; n <= 4; ++n) {
    const cplx h = oracle::hermite_at(n, u);
    const cplx hs = oracle::hermite_at(n, std::sqrt(nu) * u);
    CHECK(oracle::rel_err(hermite_nu(n, nu, u, HermiteNuConvention::plain), h) < 1e-13);
    CHECK(oracle::rel_err(hermite_nu(n, nu, u, HermiteNuConvention::scaled_argument), hs) < 1e-13);
    CHECK(oracle::rel_err(hermite_nu(n, nu, u, HermiteNuConvention::scaled_normalized), std::pow(nu, n / 2.0) * hs) <
          1e-13);
  }
  CHECK(std::string(convention_name(HermiteNuConvention::scaled_normalized)) == "scaled_normalized");
}

TEST_CASE("standard transform images are orthonormal in the weighted Fock space") {
  const SParam sp(0.5);
  for (int n = 0; n <= 2; ++n) {
    std::vector<ComplexEnvelopedFn> images;
    for (int m = 0; m <= 3; ++m) images.push_back(image_standard_Bn(g_enveloped(m, sp.nu()), n, sp.nu(), gauss_hermite_cached(64)));
    CHECK(gram_Lnu_C(images, sp.nu(), make_rule_2d(40)).deviation_from_identity() < 1e-10);
  }
}

TEST_CASE("n-independence report is exploratory") {
  const SParam sp(0.5);
  const CheckReport r = check_n_independence(1, 0, 1, sp, gauss_hermite_cached(48), make_rule_2d(32), 6);
  CHECK(r.exploratory);
  CHECK(r.name == "n_independence");
  CHECK(std::isfinite(r.max_abs_error));
  CHECK_FALSE(r.note.empty());
}
