#include <doctest.h>

#include <numeric>

#include "hermfock/quadrature.hpp"
#include "hermfock/spaces.hpp"
#include "oracles.hpp"

using namespace hermfock;

TEST_CASE("tiny rules in closed form") {
  const auto r1 = gauss_hermite(1);
  CHECK(r1.nodes()[0] == doctest::Approx(0.0));
  CHECK(r1.weights()[0] == doctest::Approx(std::sqrt(oracle::pi)));

  const auto r2 = gauss_hermite(2);
  CHECK(r2.nodes()[0] == doctest::Approx(-1 / std::sqrt(2.0)));
  CHECK(r2.nodes()[1] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(r2.weights()[0] == doctest::Approx(std::sqrt(oracle::pi) / 2));

  // Q = 3: nodes 0, +-sqrt(3/2); weights 2 sqrt(pi)/3, sqrt(pi)/6.
  const auto r3 = gauss_hermite(3);
  CHECK(r3.nodes()[2] == doctest::Approx(std::sqrt(1.5)));
  CHECK(r3.weights()[1] == doctest::Approx(2 * std::sqrt(oracle::pi) / 3));
  CHECK(r3.weights()[0] == doctest::Approx(std::sqrt(oracle::pi) / 6));
}

TEST_CASE("rules are symmetric, ascending and exact on even moments") {
  for (int q : {5, 16, 64, 128, 200}) {
    const auto r = gauss_hermite(q);
    const auto& u = r.nodes();
    const auto& w = r.weights();
    REQUIRE(r.order() == q);
    CHECK(std::is_sorted(u.begin(), u.end()));
    for (int i = 0; i < q; ++i) {
      CHECK(u[i] == doctest::Approx(-u[q - 1 - i]).epsilon(1e-13));
      CHECK(w[i] > 0.0);
    }
    // int u^{2k} exp(-u^2) du = Gamma(k + 1/2); exact while 2k <= 2q - 1.
    for (int k = 0; 2 * k <= std::min(2 * q - 1, 40); ++k) {
      double sum = 0.0;
      for (int i = 0; i < q; ++i) sum += w[i] * std::pow(u[i], 2 * k);
      CHECK(sum == doctest::Approx(std::tgamma(k + 0.5)).epsilon(1e-12));
    }
  }
}

TEST_CASE("order limits and caching") {
  CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_hermite(513), std::invalid_argument);
  CHECK(&gauss_hermite_cached(32) == &gauss_hermite_cached(32));
  CHECK(gauss_hermite_cached(32).nodes() == gauss_hermite(32).nodes());
}

TEST_CASE("one-dimensional Gaussian with oscillation") {
  const auto& r = gauss_hermite_cached(64);
  for (double c : {0.5, 1.0, 3.0}) {
    for (double k : {0.0, 1.0, 4.0}) {
      const cplx got = integrate_R([&](double x) { return std::cos(k * x); }, c, r);
      CHECK(std::abs(got - std::sqrt(oracle::pi / c) * std::exp(-k * k / (4 * c))) < 1e-13);
    }
  }
}

TEST_CASE("complex Gaussian integrals in closed form") {
  const auto rule = make_rule_2d(32);
  // int exp(-a|z|^2 + b z + g zbar) = (pi/a) exp(b g / a).
  for (double a : {0.5, 2.0}) {
    QuadExponent ex;
    ex.mix = -a;
    ex.z_lin = cplx(0.3, 0.4);
    ex.b_lin = cplx(-0.2, 0.6);
    const cplx want = oracle::pi / a * std::exp(ex.z_lin * ex.b_lin / a);
    CHECK(oracle::rel_err(integrate_gaussian({[](cplx) { return cplx(1.0); }, ex}, rule), want) < 1e-13);
  }
  // exp(-a|z|^2 + b(z^2 + zbar^2)) = exp(-(a - 2b) x^2 - (a + 2b) y^2).
  QuadExponent tilted;
  tilted.mix = -1.0;
  tilted.zz = 0.3;
  tilted.bb = 0.3;
  CHECK(oracle::rel_err(integrate_gaussian({[](cplx) { return cplx(1.0); }, tilted}, rule),
                        oracle::pi / std::sqrt(0.4 * 1.6)) < 1e-13);

  // A rotated, off-centre Gaussian compared against a trapezoid oracle.
  QuadExponent rot;
  rot.mix = -1.2;
  rot.zz = cplx(0.1, 0.35);
  rot.bb = std::conj(rot.zz);
  rot.z_lin = cplx(0.5, -0.2);
  rot.b_lin = std::conj(rot.z_lin);
  const ComplexEnvelopedFn f{[](cplx z) { return z * z * std::conj(z) + 1.0; }, rot};
  const cplx want = oracle::trapezoid_2d([&](cplx z) { return f(z); }, 10.0, 300);
  CHECK(oracle::rel_err(integrate_gaussian(f, rule), want) < 1e-11);
  CHECK(oracle::rel_err(integrate_gaussian(f, make_rule_2d(40), LinearShift::none), want) < 1e-11);
  CHECK(integrate_gaussian_abs(f, rule) >= std::abs(want));
}

TEST_CASE("growing Gaussians are rejected") {
  QuadExponent ex;
  ex.mix = 1.0;
  CHECK_THROWS_AS(integrate_gaussian({[](cplx) { return cplx(1.0); }, ex}, make_rule_2d(8)), NonIntegrableError);
  QuadExponent saddle;
  saddle.mix = -1.0;
  saddle.zz = 0.6;
  saddle.bb = 0.6;
  CHECK_THROWS_AS(integrate_gaussian({[](cplx) { return cplx(1.0); }, saddle}, make_rule_2d(8)), NonIntegrableError);
}

TEST_CASE("sampled rule reproduces integrate_gaussian") {
  QuadExponent ex;
  ex.mix = -0.8;
  ex.zz = 0.2;
  ex.z_lin = 0.4;
  const ComplexEnvelopedFn f{[](cplx z) { return std::pow(z, 3) - std::conj(z); }, ex};
  const auto rule = make_rule_2d(24);
  const SampledRule sr = sample_gaussian_rule(ex, rule);
  cplx sum = 0.0;
  for (std::size_t k = 0; k < sr.z.size(); ++k) sum += sr.weight[k] * f.stripped(sr.z[k]);
  CHECK(oracle::rel_err(sum, integrate_gaussian(f, rule)) < 1e-14);
}

TEST_CASE("inner products and Gram matrices") {
  const SParam sp(0.5);
  const auto rule = make_rule_2d(48);
  std::vector<ComplexEnvelopedFn> fam;
  for (int m = 0; m <= 6; ++m) fam.push_back(as_enveloped(psi_exppoly(m, sp)));
  const GramMatrix g = gram_Hs(fam, sp, rule);
  CHECK(g.size == 7);
  CHECK(g.deviation_from_identity() < 1e-12);
  for (std::size_t i = 0; i < g.size; ++i) {
    for (std::size_t j = 0; j < g.size; ++j) CHECK(std::abs(g(i, j) - std::conj(g(j, i))) < 1e-14);
  }
  CHECK(std::abs(inner_Hs(psi_exppoly(2, sp), psi_exppoly(2, sp), sp, rule) - 1.0) < 1e-12);

  // Mixed exponents take the pairwise path; entries must agree with inner_Hs.
  std::vector<ComplexEnvelopedFn> mixed{as_enveloped(psi_exppoly(1, sp)), as_enveloped(phi_exppoly(1, sp))};
  const GramMatrix gm = gram_Hs(mixed, sp, rule);
  CHECK(std::abs(gm(0, 1) - inner_Hs(mixed[0], mixed[1], sp, rule)) < 1e-14);
  CHECK(std::abs(gm(1, 1) - 1.0) < 1e-12);

  std::vector<ComplexEnvelopedFn> tilde;
  for (int m = 0; m <= 4; ++m) tilde.push_back(as_enveloped(psi_tilde_exppoly(m, sp)));
  CHECK(gram_Lnu_C(tilde, sp.nu(), rule).deviation_from_identity() < 1e-12);
  CHECK(std::abs(inner_Lnu_C(psi_tilde_exppoly(3, sp), psi_tilde_exppoly(3, sp), sp.nu(), rule) - 1.0) < 1e-12);
}

TEST_CASE("cross Gram needs shared exponents") {
  const SParam sp(0.5);
  const auto rule = make_rule_2d(32);
  std::vector<ComplexEnvelopedFn> a{as_enveloped(psi_exppoly(0, sp)), as_enveloped(psi_exppoly(1, sp))};
  std::vector<ComplexEnvelopedFn> b{as_enveloped(psi_exppoly(0, sp)), as_enveloped(phi_exppoly(0, sp))};
  CHECK_THROWS(cross_gram_Hs(a, b, sp, rule));
  const CrossGram c = cross_gram_Hs(a, a, sp, rule);
  CHECK(c.rows == 2);
  CHECK(std::abs(c(0, 0) - 1.0) < 1e-13);
  CHECK(std::abs(c(0, 1)) < 1e-13);
}

TEST_CASE("real-line inner product") {
  const auto& r = gauss_hermite_cached(64);
  const RealEnvelopedFn f{[](double x) { return cplx(x * x); }, 0.5};
  // int x^4 exp(-x^2) dx = 3 sqrt(pi) / 4.
  CHECK(std::abs(inner_L2nu_R(f, f, 0.0, r) - 0.75 * std::sqrt(oracle::pi)) < 1e-13);
}
