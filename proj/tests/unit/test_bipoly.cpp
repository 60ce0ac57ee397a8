#include <doctest.h>

#include "hermfock/bipoly.hpp"
#include "oracles.hpp"

using namespace hermfock;

namespace {

double max_pointwise(const BiPoly& p, const std::function<cplx(cplx)>& f, std::uint64_t seed = 1) {
  double worst = 0.0;
  for (cplx z : oracle::random_points(seed, 25, 1.5)) worst = std::max(worst, oracle::rel_err(p.eval(z), f(z)));
  return worst;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
  BiPoly p = BiPoly::z() - BiPoly::z();
  CHECK(p.is_zero());
  CHECK(p.degree_z() == -1);
  p.add_term({2, 1}, 0.0);
  CHECK(p.size() == 0);
}

TEST_CASE("arithmetic matches pointwise evaluation") {
  const BiPoly p = BiPoly::monomial(2, 1, {1.0, 2.0}) + BiPoly::constant(3.0);
  const BiPoly q = BiPoly::z() - 2.0 * BiPoly::zbar();
  const cplx z(0.4, -0.9);
  CHECK(oracle::rel_err((p * q).eval(z), p.eval(z) * q.eval(z)) < 1e-15);
  CHECK(oracle::rel_err((p + q).eval(z), p.eval(z) + q.eval(z)) < 1e-15);
  CHECK(oracle::rel_err(p.conj().eval(z), std::conj(p.eval(z))) < 1e-15);
  CHECK(p.coeff(2, 1) == cplx(1.0, 2.0));
  CHECK(p.degree_z() == 2);
  CHECK(p.degree_zbar() == 1);
}

TEST_CASE("shifted is p(z - w)") {
  const BiPoly p = BiPoly::monomial(3, 2, 0.5) - BiPoly::monomial(1, 0, {0.0, 1.0});
  const cplx w(0.3, 0.7);
  CHECK(max_pointwise(p.shifted(w), [&](cplx z) { return p.eval(z - w); }) < 1e-14);
}

TEST_CASE("Wirtinger derivatives of monomials") {
  const BiPoly p = BiPoly::monomial(3, 2, 2.0);
  CHECK(derivative(p, Wirtinger::z) == BiPoly::monomial(2, 2, 6.0));
  CHECK(derivative(p, Wirtinger::zbar) == BiPoly::monomial(3, 1, 4.0));
  CHECK(derivative(BiPoly::zbar(), Wirtinger::z).is_zero());
}

TEST_CASE("Rodrigues polynomials match the finite-sum oracle") {
  for (double nu : {0.7, 1.0, 2.3}) {
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        const BiPoly h = complex_hermite_rodrigues(m, n, nu);
        CHECK(max_pointwise(h, [&](cplx z) { return oracle::complex_hermite(m, n, nu, z); }) < 1e-12);
        CHECK(oracle::rel_err(h.coeff(m, n), std::pow(nu, m + n)) < 1e-13);
      }
    }
  }
}

TEST_CASE("creation-operator powers reproduce H_{m,n}") {
  const double nu = 1.7;
  for (int m = 0; m <= 6; ++m) {
    const BiPoly zm = BiPoly::monomial(m, 0, std::pow(nu, m));
    for (int n = 0; n <= 6; ++n) {
      CHECK(max_relative_coeff_diff(nabla_power(zm, OperatorParams(nu), n), complex_hermite_rodrigues(m, n, nu)) <
            1e-12);
    }
  }
  CHECK_THROWS_AS(OperatorParams(0.0), std::invalid_argument);
}

TEST_CASE("H_{m,n} are eigenvectors of Delta_nu with eigenvalue n nu") {
  const double nu = 0.9;
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const BiPoly h = complex_hermite_rodrigues(m, n, nu);
      CHECK(max_relative_coeff_diff(delta_nu_apply(h, nu), (n * nu) * h) < 1e-12);
    }
  }
}

TEST_CASE("conjugation swaps the indices") {
  const double nu = 1.2;
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      CHECK(max_relative_coeff_diff(complex_hermite_rodrigues(m, n, nu).conj(), complex_hermite_rodrigues(n, m, nu)) <
            1e-13);
    }
  }
}

TEST_CASE("I-polynomials: first order and pointwise recurrence") {
  const double a = 1.3, b = -0.4;
  const cplx c(0.2, -0.5);
  const BiPoly i1 = i_poly(1, a, b, c);
  CHECK(max_pointwise(i1, [&](cplx z) { return a * std::conj(z) - 2.0 * b * z - c; }) < 1e-15);
  for (int n = 0; n <= 6; ++n) {
    const BiPoly p = i_poly(n, a, b, c);
    CHECK(max_pointwise(p, [&](cplx z) { return i_poly_eval(n, a, b, c, z); }, 9) < 1e-12);
  }
}

TEST_CASE("holomorphic Hermite polynomial coefficients") {
  for (int m = 0; m <= 10; ++m) {
    const BiPoly h = hermite_bipoly(m);
    CHECK(h.degree_zbar() <= 0);
    CHECK(max_pointwise(h, [&](cplx z) { return oracle::hermite_at(m, z); }) < 1e-12);
  }
}

TEST_CASE("H' is the heat polynomial") {
  const cplx x(0.4, 0.3), y(-0.7, 0.2);
  for (int n = 0; n <= 8; ++n) {
    cplx want = 0.0;
    for (int k = 0; 2 * k <= n; ++k) {
      want += oracle::factorial(n) / (oracle::factorial(k) * oracle::factorial(n - 2 * k)) * std::pow(x, n - 2 * k) *
              std::pow(y, k);
    }
    CHECK(oracle::rel_err(hprime(n, x, y), want) < 1e-12);
  }
  CHECK_THROWS_AS(hprime(2, 1.0, 0.0), std::invalid_argument);
}
