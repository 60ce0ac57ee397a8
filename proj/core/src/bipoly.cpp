#include "hermfock/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermfock {

namespace {

const cplx kI{0.0, 1.0};

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative order");
}

std::vector<cplx> powers(cplx base, int max_exp) {
  std::vector<cplx> out(static_cast<std::size_t>(std::max(max_exp, 0)) + 1);
  out[0] = 1.0;
  for (int k = 1; k <= max_exp; ++k) out[k] = out[k - 1] * base;
  return out;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return std::round(b);
}

// Gaussian-twisted derivative used by the Rodrigues constructions:
// p -> d p + factor * p, factor a BiPoly.
BiPoly twisted_derivative(const BiPoly& p, Wirtinger wrt, const BiPoly& factor) {
  return derivative(p, wrt) + factor * p;
}

}  // namespace

BiPoly BiPoly::constant(cplx c) {
  BiPoly p;
  p.add_term({0, 0}, c);
  return p;
}

BiPoly BiPoly::monomial(int z_degree, int zbar_degree, cplx c) {
  if (z_degree < 0 || zbar_degree < 0) throw std::invalid_argument("BiPoly: negative exponent");
  BiPoly p;
  p.add_term({z_degree, zbar_degree}, c);
  return p;
}

void BiPoly::add_term(Monomial m, cplx c) {
  if (c == cplx(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx(0.0)) terms_.erase(it);
  }
}

cplx BiPoly::coeff(int z_degree, int zbar_degree) const {
  auto it = terms_.find({z_degree, zbar_degree});
  return it == terms_.end() ? cplx(0.0) : it->second;
}

int BiPoly::degree_z() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.z);
  return d;
}

int BiPoly::degree_zbar() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.zbar);
  return d;
}

cplx BiPoly::eval(cplx z, cplx zbar) const {
  if (terms_.empty()) return 0.0;
  const auto zp = powers(z, degree_z());
  const auto bp = powers(zbar, degree_zbar());
  cplx sum = 0.0;
  for (const auto& [m, c] : terms_) sum += c * zp[m.z] * bp[m.zbar];
  return sum;
}

BiPoly BiPoly::conj() const {
  BiPoly out;
  for (const auto& [m, c] : terms_) out.add_term({m.zbar, m.z}, std::conj(c));
  return out;
}

BiPoly BiPoly::shifted(cplx w) const {
  // (z - w)^i (zbar - wbar)^j expanded binomially.
  BiPoly out;
  const auto wp = powers(-w, std::max(degree_z(), 0));
  const auto wbp = powers(-std::conj(w), std::max(degree_zbar(), 0));
  for (const auto& [m, c] : terms_) {
    for (int a = 0; a <= m.z; ++a) {
      const cplx ca = c * binomial(m.z, a) * wp[m.z - a];
      for (int b = 0; b <= m.zbar; ++b) {
        out.add_term({a, b}, ca * binomial(m.zbar, b) * wbp[m.zbar - b]);
      }
    }
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(cplx scale) {
  if (scale == cplx(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    // Underflow to zero is the only way a nonzero scale can produce one.
    it = (it->second == cplx(0.0)) ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.z + mb.z, ma.zbar + mb.zbar}, ca * cb);
    }
  }
  return out;
}

double max_relative_coeff_diff(const BiPoly& p, const BiPoly& q) {
  double worst = 0.0;
  auto visit = [&](const BiPoly& src) {
    for (const auto& [m, c] : src.terms()) {
      const cplx a = p.coeff(m.z, m.zbar);
      const cplx b = q.coeff(m.z, m.zbar);
      const double scale = std::max(std::abs(a), std::abs(b));
      if (scale > 0.0) worst = std::max(worst, std::abs(a - b) / scale);
    }
  };
  visit(p);
  visit(q);
  return worst;
}

BiPoly derivative(const BiPoly& p, Wirtinger wrt) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (wrt == Wirtinger::z) {
      if (m.z > 0) out.add_term({m.z - 1, m.zbar}, c * double(m.z));
    } else {
      if (m.zbar > 0) out.add_term({m.z, m.zbar - 1}, c * double(m.zbar));
    }
  }
  return out;
}

OperatorParams::OperatorParams(double nu_, cplx a_, cplx c_) : nu(nu_), a(a_), c(c_) {
  if (!(nu > 0.0)) throw std::invalid_argument("OperatorParams: nu must be positive");
}

BiPoly nabla_apply(const BiPoly& p, const OperatorParams& params) {
  BiPoly out = -derivative(p, Wirtinger::z);
  out += BiPoly::monomial(0, 1, params.nu) * p;
  out += BiPoly::monomial(1, 0, -2.0 * params.a) * p;
  return out;
}

BiPoly nabla_power(const BiPoly& p, const OperatorParams& params, int n) {
  require_nonnegative(n, "nabla_power");
  BiPoly out = p;
  for (int k = 0; k < n; ++k) out = nabla_apply(out, params);
  return out;
}

BiPoly complex_hermite_rodrigues(int m, int n, double nu) {
  require_nonnegative(m, "complex_hermite_rodrigues");
  require_nonnegative(n, "complex_hermite_rodrigues");
  if (!(nu > 0.0)) throw std::invalid_argument("complex_hermite_rodrigues: nu must be positive");
  // exp(nu|z|^2) d_z exp(-nu|z|^2) p = d_z p - nu zbar p, and likewise for zbar.
  const BiPoly twist_z = BiPoly::monomial(0, 1, -nu);
  const BiPoly twist_zbar = BiPoly::monomial(1, 0, -nu);
  BiPoly p = BiPoly::constant(1.0);
  for (int k = 0; k < n; ++k) p = twisted_derivative(p, Wirtinger::z, twist_z);
  for (int k = 0; k < m; ++k) p = twisted_derivative(p, Wirtinger::zbar, twist_zbar);
  if ((m + n) % 2 == 1) p *= -1.0;
  return p;
}

BiPoly delta_nu_apply(const BiPoly& p, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("delta_nu_apply: nu must be positive");
  const BiPoly dzbar = derivative(p, Wirtinger::zbar);
  return -derivative(dzbar, Wirtinger::z) + BiPoly::monomial(0, 1, nu) * dzbar;
}

BiPoly i_poly(int n, double a, double b, cplx c) {
  require_nonnegative(n, "i_poly");
  if (!(a > 0.0)) throw std::invalid_argument("i_poly: a must be positive");
  BiPoly log_derivative = BiPoly::monomial(0, 1, -a) + BiPoly::monomial(1, 0, 2.0 * b) +
                          BiPoly::constant(c);
  BiPoly p = BiPoly::constant(1.0);
  for (int k = 0; k < n; ++k) p = twisted_derivative(p, Wirtinger::z, log_derivative);
  if (n % 2 == 1) p *= -1.0;
  return p;
}

cplx i_poly_eval(int n, double a, double b, cplx c, cplx z) {
  require_nonnegative(n, "i_poly_eval");
  if (!(a > 0.0)) throw std::invalid_argument("i_poly_eval: a must be positive");
  const cplx u = -a * std::conj(z) + 2.0 * b * z + c;
  cplx prev = 1.0;
  cplx cur = u;
  if (n == 0) return 1.0;
  for (int k = 1; k < n; ++k) {
    const cplx next = u * cur + 2.0 * b * k * prev;
    prev = cur;
    cur = next;
  }
  return (n % 2 == 0) ? cur : -cur;
}

BiPoly hermite_bipoly(int m) {
  require_nonnegative(m, "hermite_bipoly");
  // Coefficients from the recurrence are exact integers while they fit in 53 bits.
  BiPoly prev = BiPoly::constant(1.0);
  if (m == 0) return prev;
  BiPoly cur = BiPoly::monomial(1, 0, 2.0);
  const BiPoly two_z = BiPoly::monomial(1, 0, 2.0);
  for (int k = 1; k < m; ++k) {
    BiPoly next = two_z * cur - prev * double(2 * k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

cplx hprime(int n, cplx x, cplx y) {
  require_nonnegative(n, "hprime");
  if (y == cplx(0.0)) throw std::invalid_argument("hprime: y must be nonzero");
  const cplx root_y = std::sqrt(y);  // principal branch
  const cplx arg = x / (2.0 * kI) / root_y;
  const cplx hn = hermite_seq(n, arg).values.back();
  return std::pow(kI, n) * std::pow(root_y, n) * hn;
}

cplx hprime_pair(int m, int n, cplx x, cplx y, cplx zz, cplx w, cplx tau) {
  require_nonnegative(m, "hprime_pair");
  require_nonnegative(n, "hprime_pair");
  if (y == cplx(0.0) || w == cplx(0.0)) {
    throw std::invalid_argument("hprime_pair: y and w must be nonzero");
  }
  const int kmax = std::min(m, n);
  cplx sum = 0.0;
  cplx tau_pow = 1.0;
  double k_fact = 1.0;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      tau_pow *= -tau;
      k_fact *= k;
    }
    const double denom = std::tgamma(n - k + 1.0) * std::tgamma(m - k + 1.0);
    sum += tau_pow / k_fact * hprime(n - k, x, y) * hprime(m - k, zz, w) / denom;
  }
  return std::tgamma(m + 1.0) * std::tgamma(n + 1.0) * sum;
}

}  // namespace hermfock
