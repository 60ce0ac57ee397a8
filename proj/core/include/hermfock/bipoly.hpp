#pragma once

#include <compare>
#include <complex>
#include <map>

#include "hermfock/hermite.hpp"

namespace hermfock {

/// Exponents of z and zbar in one term of a BiPoly.
struct Monomial {
  int z = 0;
  int zbar = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse polynomial in the independent indeterminates z and zbar with
/// complex coefficients. Terms with an exactly zero coefficient are never
/// stored.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, cplx>;

  BiPoly() = default;

  static BiPoly constant(cplx c);
  static BiPoly monomial(int z_degree, int zbar_degree, cplx c = 1.0);
  static BiPoly z() { return monomial(1, 0); }
  static BiPoly zbar() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  cplx coeff(int z_degree, int zbar_degree) const;

  /// Highest power of z (resp. zbar) present; -1 for the zero polynomial.
  int degree_z() const;
  int degree_zbar() const;

  /// sum c_ij z^i zbar^j with zbar = conj(z).
  cplx eval(cplx z) const { return eval(z, std::conj(z)); }
  /// Treats the two slots as independent values.
  cplx eval(cplx z, cplx zbar) const;

  /// The polynomial whose value at z is conj(p(z)).
  BiPoly conj() const;
  /// p(z - w, zbar - conj(w)) expanded in powers of z and zbar.
  BiPoly shifted(cplx w) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(cplx scale);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, cplx s) { return a *= s; }
  friend BiPoly operator*(cplx s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(BiPoly a) { return a *= -1.0; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  void add_term(Monomial m, cplx c);

 private:
  TermMap terms_;
};

/// Largest |p_ij - q_ij| / max(|p_ij|, |q_ij|) over the union of supports.
/// Zero when both polynomials are identical.
double max_relative_coeff_diff(const BiPoly& p, const BiPoly& q);

enum class Wirtinger { z, zbar };

/// Formal partial derivative, z and zbar independent.
BiPoly derivative(const BiPoly& p, Wirtinger wrt);

/// Parameters of the creation operator nabla_{nu,a} = -d_z + nu zbar - 2 a z.
struct OperatorParams {
  double nu;
  cplx a = 0.0;
  cplx c = 0.0;

  /// Throws std::invalid_argument unless nu > 0.
  OperatorParams(double nu_, cplx a_ = 0.0, cplx c_ = 0.0);
};

BiPoly nabla_apply(const BiPoly& p, const OperatorParams& params);
BiPoly nabla_power(const BiPoly& p, const OperatorParams& params, int n);

/// H^nu_{m,n}(z, zbar) = (-1)^{m+n} exp(nu|z|^2) d_zbar^m d_z^n exp(-nu|z|^2).
/// Leading term nu^{m+n} z^m zbar^n; H^nu_{m,0} = nu^m z^m.
BiPoly complex_hermite_rodrigues(int m, int n, double nu);

/// Delta_nu p = -d_z d_zbar p + nu zbar d_zbar p. H^nu_{m,n} is an eigenvector
/// with eigenvalue n nu.
BiPoly delta_nu_apply(const BiPoly& p, double nu);

/// I^{a,b}_n(z, zbar | c) = (-1)^n exp(a|z|^2 - b z^2 - c z) d_z^n exp(-a|z|^2 + b z^2 + c z).
/// Requires a > 0; b is real by signature.
BiPoly i_poly(int n, double a, double b, cplx c);

/// Pointwise value of I^{a,b}_n(z, zbar | c). With u = -a zbar + 2 b z + c the
/// polynomials P_n = (-1)^n I_n satisfy P_{n+1} = u P_n + 2 b n P_{n-1}.
cplx i_poly_eval(int n, double a, double b, cplx c, cplx z);

/// H_m(z) as a holomorphic BiPoly with exact integer coefficients.
BiPoly hermite_bipoly(int m);

/// H'_n(x, y) = i^n y^{n/2} H_n(x / (2i) y^{-1/2}) using principal branches.
/// Throws std::invalid_argument when y == 0.
cplx hprime(int n, cplx x, cplx y);

/// m! n! sum_k (-tau)^k / k! H'_{n-k}(x,y)/(n-k)! H'_{m-k}(zz,w)/(m-k)!.
/// Throws std::invalid_argument when y == 0 or w == 0.
cplx hprime_pair(int m, int n, cplx x, cplx y, cplx zz, cplx w, cplx tau);

}  // namespace hermfock
