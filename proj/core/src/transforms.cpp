#include "hermfock/transforms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hermfock/hermite.hpp"

namespace hermfock {

namespace {

using std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRoundingFactor = 16.0;

double factorial(int n) { return std::tgamma(n + 1.0); }

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return std::round(b);
}

void require_level(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

const QuadRule1D& half_rule(const QuadRule1D& rule) {
  return gauss_hermite_cached(std::max(1, rule.order() / 2));
}

QuadRule2D half_rule(const QuadRule2D& rule) {
  return make_rule_2d(std::max(1, rule.x.order() / 2), std::max(1, rule.y.order() / 2));
}

struct LineSum {
  cplx value;
  double abs_sum;
};

// int_R g(t) exp(-c t^2 + lin t + c0) dt with nodes centred at Re(lin)/(2c).
// The exponent is formed in full and exponentiated once per node.
LineSum gauss_line(const std::function<cplx(double)>& g, double c, cplx lin, cplx c0,
                   const QuadRule1D& rule) {
  if (!(c > 0.0)) {
    throw NonIntegrableError("transform integrand does not decay: Gaussian coefficient " +
                             std::to_string(c));
  }
  const double root = std::sqrt(c);
  const double centre = lin.real() / (2.0 * c);
  LineSum out{0.0, 0.0};
  for (int i = 0; i < rule.order(); ++i) {
    const double u = rule.nodes()[i];
    const double t = centre + u / root;
    const cplx e = -c * t * t + lin * t + c0 + u * u;
    const cplx term = rule.weights()[i] * g(t) * std::exp(e);
    out.value += term;
    out.abs_sum += std::abs(term);
  }
  out.value /= root;
  out.abs_sum /= root;
  return out;
}

TransformResult line_result(const std::function<cplx(double)>& g, double c, cplx lin, cplx c0,
                            cplx prefactor, const QuadRule1D& rule) {
  const LineSum full = gauss_line(g, c, lin, c0, rule);
  const LineSum half = gauss_line(g, c, lin, c0, half_rule(rule));
  const double scale = std::abs(prefactor);
  return {prefactor * full.value,
          scale * (std::abs(full.value - half.value) + kRoundingFactor * kEps * full.abs_sum)};
}

TransformResult plane_result(const ComplexEnvelopedFn& f, cplx prefactor,
                             const QuadRule2D& rule) {
  const cplx full = integrate_gaussian(f, rule);
  const double abs_sum = integrate_gaussian_abs(f, rule);
  const cplx half = integrate_gaussian(f, half_rule(rule));
  return {prefactor * full,
          std::abs(prefactor) * (std::abs(full - half) + kRoundingFactor * kEps * abs_sum)};
}

// Coefficients of the Segal-Bargmann kernel exp(-t^2/(2s) - z^2/(2s) + beta t z).
double bs_norm(const SParam& sp) {
  const double s = sp.s();
  return std::sqrt((1.0 - s * s) / (2.0 * pi * s * std::sqrt(s * pi)));
}
double bs_beta(const SParam& sp) { return std::sqrt(1.0 - sp.s() * sp.s()) / sp.s(); }

// Coherent-state kernel pieces: exp(-z^2/(2s) - kappa x^2 + lambda x z) I_n(z | lambda x).
double cs_norm(int n, const SParam& sp) {
  const double s = sp.s();
  const double nu = sp.nu();
  return std::pow(nu / (pi * s), 0.25) *
         std::sqrt((1.0 - s * s) / (2.0 * pi * s * std::pow(nu, n) * factorial(n)));
}
double cs_kappa(const SParam& sp) { return sp.nu() * (1.0 - sp.s()) / (2.0 * sp.s()); }
double cs_lambda(const SParam& sp) { return sp.nu() * std::sqrt(2.0 * sp.s()) / sp.s(); }

double bn_norm(int n, double nu) {
  return std::pow(nu / pi, 0.75) / std::sqrt(std::pow(2.0 * nu, n) * factorial(n));
}

BiPoly binomial_power(cplx shift, int n, bool conjugate_variable) {
  // (v + shift)^n in v = xi (or xibar).
  BiPoly out;
  for (int k = 0; k <= n; ++k) {
    const cplx c = binomial(n, k) * std::pow(shift, n - k);
    out.add_term(conjugate_variable ? Monomial{0, k} : Monomial{k, 0}, c);
  }
  return out;
}

QuadExponent level_exponent(double nu, cplx alpha_zz, cplx z) {
  QuadExponent q;
  q.zz = alpha_zz;
  q.mix = -nu;
  q.b_lin = nu * z;
  return q;
}

ComplexEnvelopedFn enveloped_product(const ExpPoly& psi, BiPoly extra, const QuadExponent& ex) {
  return as_enveloped(ExpPoly(psi.poly() * extra, psi.exponent() + ex));
}

}  // namespace

cplx kernel_B(double t, cplx z, const SParam& sp) {
  const double s = sp.s();
  return bs_norm(sp) * std::exp(-t * t / (2.0 * s) - z * z / (2.0 * s) + bs_beta(sp) * t * z);
}

cplx kernel_Btilde(double t, cplx z, const SParam& sp) {
  const double rs = std::sqrt(sp.s());
  return std::sqrt(rs) * kernel_B(rs * t, z, sp);
}

TransformResult apply_Bs(const RealEnvelopedFn& f, cplx z, const SParam& sp,
                         const QuadRule1D& rule) {
  const double s = sp.s();
  return line_result(f.stripped, f.envelope + 0.5 / s, bs_beta(sp) * z, -z * z / (2.0 * s),
                     bs_norm(sp), rule);
}

TransformResult apply_Btilde(const RealEnvelopedFn& f, cplx z, const SParam& sp,
                             const QuadRule1D& rule) {
  // s^{1/4} B_s(sqrt(s) t, z): exponent -t^2/2 - z^2/(2s) + beta sqrt(s) t z.
  const double s = sp.s();
  return line_result(f.stripped, f.envelope + 0.5, bs_beta(sp) * std::sqrt(s) * z,
                     -z * z / (2.0 * s), std::pow(s, 0.25) * bs_norm(sp), rule);
}

ComplexEnvelopedFn image_Bs(const RealEnvelopedFn& f, const SParam& sp, QuadRule1D rule) {
  const double s = sp.s();
  const double c = f.envelope + 0.5 / s;
  if (!(c > 0.0)) throw NonIntegrableError("image_Bs: envelope too negative");
  const double beta = bs_beta(sp);
  // int exp(-c t^2 + beta t z) ~ exp(beta^2 z^2 / (4c)): the image's z^2 growth.
  const double declared = -0.5 / s + beta * beta / (4.0 * c);
  QuadExponent ex;
  ex.zz = declared;
  auto stripped = [g = f.stripped, c, beta, s, declared, norm = bs_norm(sp),
                   rule = std::move(rule)](cplx z) {
    return norm * gauss_line(g, c, beta * z, -z * z * (0.5 / s + declared), rule).value;
  };
  return {std::move(stripped), ex};
}

std::vector<TransformResult> apply_Bs_inverse(const ComplexEnvelopedFn& phi,
                                              const std::vector<double>& ts, const SParam& sp,
                                              const QuadRule2D& rule) {
  const double s = sp.s();
  const double beta = bs_beta(sp);
  // B_s(t, zbar) = norm exp(-t^2/(2s) - zbar^2/(2s) + beta t zbar). Only the
  // zbar^2 part enters the envelope, so one node set serves every t.
  QuadExponent base = phi.exponent + omega_exponent(sp);
  base.bb += -0.5 / s;

  auto sum_over = [&](const QuadRule2D& r, std::vector<double>* abs_sums) {
    const SampledRule sampled = sample_gaussian_rule(base, r, LinearShift::none);
    std::vector<cplx> values(sampled.z.size());
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = sampled.weight[k] * phi.stripped(sampled.z[k]);
    std::vector<cplx> out(ts.size(), 0.0);
    if (abs_sums) abs_sums->assign(ts.size(), 0.0);
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const double t = ts[j];
      for (std::size_t k = 0; k < values.size(); ++k) {
        const cplx term = values[k] * std::exp(beta * t * std::conj(sampled.z[k]) - t * t / (2.0 * s));
        out[j] += term;
        if (abs_sums) (*abs_sums)[j] += std::abs(term);
      }
    }
    return out;
  };

  std::vector<double> abs_sums;
  const auto full = sum_over(rule, &abs_sums);
  const auto half = sum_over(half_rule(rule), nullptr);
  const double norm = bs_norm(sp);
  std::vector<TransformResult> out;
  out.reserve(ts.size());
  for (std::size_t j = 0; j < ts.size(); ++j) {
    out.push_back({norm * full[j],
                   norm * (std::abs(full[j] - half[j]) + kRoundingFactor * kEps * abs_sums[j])});
  }
  return out;
}

TransformResult apply_Bs_inverse(const ComplexEnvelopedFn& phi, double t, const SParam& sp,
                                 const QuadRule2D& rule) {
  return apply_Bs_inverse(phi, std::vector<double>{t}, sp, rule).front();
}

TransformResult apply_Bs_inverse(const ExpPoly& phi, double t, const SParam& sp,
                                 const QuadRule2D& rule) {
  return apply_Bs_inverse(as_enveloped(phi), t, sp, rule);
}

TransformResult apply_Wn(const ExpPoly& psi, int n, cplx z, const SParam& sp,
                         const QuadRule2D& rule) {
  require_level(n, "apply_Wn");
  const double nu = sp.nu();
  const cplx prefactor = nu / pi * std::sqrt(std::pow(nu, n) / factorial(n)) *
                         std::exp(-sp.alpha() * z * z);
  // (zbar - xibar)^n = (-1)^n (xibar - zbar)^n
  BiPoly factor = binomial_power(-std::conj(z), n, true);
  if (n % 2 == 1) factor *= -1.0;
  return plane_result(enveloped_product(psi, std::move(factor), level_exponent(nu, sp.alpha(), z)),
                      prefactor, rule);
}

TransformResult apply_Wn_inverse(const ExpPoly& psi, int n, cplx z, const SParam& sp,
                                 const QuadRule2D& rule) {
  require_level(n, "apply_Wn_inverse");
  const double nu = sp.nu();
  const cplx prefactor = nu / pi * std::sqrt(std::pow(nu, n) / factorial(n)) *
                         std::exp(-sp.alpha() * z * z);
  return plane_result(enveloped_product(psi, binomial_power(-z, n, false),
                                        level_exponent(nu, sp.alpha(), z)),
                      prefactor, rule);
}

TransformResult apply_Tkn(const ExpPoly& psi, int k, int n, double nu, cplx z,
                          const QuadRule2D& rule) {
  require_level(k, "apply_Tkn");
  require_level(n, "apply_Tkn");
  if (!(nu > 0.0)) throw std::invalid_argument("apply_Tkn: nu must be positive");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double prefactor =
      sign * nu / (pi * std::sqrt(factorial(k) * factorial(n) * std::pow(nu, k + n)));
  return plane_result(enveloped_product(psi, complex_hermite_rodrigues(k, n, nu).shifted(z),
                                        level_exponent(nu, 0.0, z)),
                      prefactor, rule);
}

cplx kernel_S_closed(int n, double x, cplx z, const SParam& sp) {
  require_level(n, "kernel_S_closed");
  const double s = sp.s();
  const double nu = sp.nu();
  const double lambda = cs_lambda(sp);
  return cs_norm(n, sp) *
         std::exp(-z * z / (2.0 * s) - cs_kappa(sp) * x * x + lambda * x * z) *
         i_poly_eval(n, nu, -0.5 * nu, lambda * x, z);
}

TransformResult apply_Sn(const RealEnvelopedFn& f, int n, cplx z, const SParam& sp,
                         const QuadRule1D& rule) {
  require_level(n, "apply_Sn");
  const double nu = sp.nu();
  const double lambda = cs_lambda(sp);
  auto g = [&f, n, nu, lambda, z](double x) {
    return f.stripped(x) * i_poly_eval(n, nu, -0.5 * nu, lambda * x, z);
  };
  return line_result(g, f.envelope + nu + cs_kappa(sp), lambda * z, -z * z / (2.0 * sp.s()),
                     cs_norm(n, sp), rule);
}

ComplexEnvelopedFn image_Sn(const RealEnvelopedFn& f, int n, const SParam& sp, QuadRule1D rule) {
  require_level(n, "image_Sn");
  const double s = sp.s();
  const double nu = sp.nu();
  const double lambda = cs_lambda(sp);
  const double c = f.envelope + nu + cs_kappa(sp);
  if (!(c > 0.0)) throw NonIntegrableError("image_Sn: envelope too negative");
  const double declared = -0.5 / s + lambda * lambda / (4.0 * c);
  QuadExponent ex;
  ex.zz = declared;
  auto stripped = [g = f.stripped, n, nu, lambda, c, s, declared, norm = cs_norm(n, sp),
                   rule = std::move(rule)](cplx z) {
    auto integrand = [&](double x) { return g(x) * i_poly_eval(n, nu, -0.5 * nu, lambda * x, z); };
    return norm * gauss_line(integrand, c, lambda * z, -z * z * (0.5 / s + declared), rule).value;
  };
  return {std::move(stripped), ex};
}

const char* convention_name(HermiteNuConvention c) {
  switch (c) {
    case HermiteNuConvention::plain: return "plain";
    case HermiteNuConvention::scaled_argument: return "scaled_argument";
    case HermiteNuConvention::scaled_normalized: return "scaled_normalized";
  }
  return "unknown";
}

cplx hermite_nu(int n, double nu, cplx u, HermiteNuConvention c) {
  switch (c) {
    case HermiteNuConvention::plain:
      return hermite_seq(n, u).values.back();
    case HermiteNuConvention::scaled_argument:
      return hermite_seq(n, std::sqrt(nu) * u).values.back();
    case HermiteNuConvention::scaled_normalized:
      return std::pow(nu, 0.5 * n) * hermite_seq(n, std::sqrt(nu) * u).values.back();
  }
  throw std::invalid_argument("unknown Hermite convention");
}

TransformResult apply_standard_Bn(const RealEnvelopedFn& phi, int n, double nu, cplx z,
                                  const QuadRule1D& rule, HermiteNuConvention c) {
  require_level(n, "apply_standard_Bn");
  if (!(nu > 0.0)) throw std::invalid_argument("apply_standard_Bn: nu must be positive");
  const double centre = std::sqrt(2.0) * z.real();  // (z + zbar)/sqrt 2
  auto g = [&phi, n, nu, centre, c](double x) {
    return phi.stripped(x) * hermite_nu(n, nu, centre - x, c);
  };
  // e^{-nu (x - z/sqrt2)^2} = e^{-nu x^2 + sqrt2 nu x z - nu z^2 / 2}
  return line_result(g, phi.envelope + nu, std::sqrt(2.0) * nu * z, -0.5 * nu * z * z,
                     bn_norm(n, nu), rule);
}

ComplexEnvelopedFn image_standard_Bn(const RealEnvelopedFn& phi, int n, double nu,
                                     QuadRule1D rule, HermiteNuConvention conv) {
  require_level(n, "image_standard_Bn");
  if (!(nu > 0.0)) throw std::invalid_argument("image_standard_Bn: nu must be positive");
  const double c = phi.envelope + nu;
  if (!(c > 0.0)) throw NonIntegrableError("image_standard_Bn: envelope too negative");
  const double declared = -0.5 * nu + nu * nu / (2.0 * c);
  QuadExponent ex;
  ex.zz = declared;
  auto stripped = [g = phi.stripped, n, nu, c, declared, conv, norm = bn_norm(n, nu),
                   rule = std::move(rule)](cplx z) {
    const double centre = std::sqrt(2.0) * z.real();
    auto integrand = [&](double x) { return g(x) * hermite_nu(n, nu, centre - x, conv); };
    return norm * gauss_line(integrand, c, std::sqrt(2.0) * nu * z,
                             -z * z * (0.5 * nu + declared), rule)
                      .value;
  };
  return {std::move(stripped), ex};
}

TransformResult apply_Bprime(const RealEnvelopedFn& phi, int n, cplx z, const SParam& sp,
                             const QuadRule1D& rule, HermiteNuConvention c) {
  TransformResult r = apply_standard_Bn(phi, n, sp.nu(), z, rule, c);
  const cplx factor = m_alpha_factor(z, sp, MSign::minus);
  return {r.value * factor, r.estimated_error * std::abs(factor)};
}

ComplexEnvelopedFn image_Bprime(const RealEnvelopedFn& phi, int n, const SParam& sp,
                                QuadRule1D rule, HermiteNuConvention c) {
  ComplexEnvelopedFn out = image_standard_Bn(phi, n, sp.nu(), std::move(rule), c);
  out.exponent += m_alpha_exponent(sp, MSign::minus);
  return out;
}

RealEnvelopedFn g_enveloped(int m, double nu) {
  if (m < 0) throw std::invalid_argument("g_enveloped: negative index");
  if (!(nu > 0.0)) throw std::invalid_argument("g_enveloped: nu must be positive");
  return {[m, nu](double x) -> cplx { return scaled_basis_g(m, x, nu); }, 0.0};
}

RealEnvelopedFn f_enveloped(int m) {
  if (m < 0) throw std::invalid_argument("f_enveloped: negative index");
  const double norm = std::pow(pi, -0.25);
  return {[m, norm](double t) { return norm * hermite_normalized_seq(m, t).back(); }, 0.5};
}

namespace {

struct LevelCoefficients {
  Eigen::MatrixXcd coeffs;  // column per requested m
  std::string note;
};

// Coefficients of psi_{m,n} (one column per m) in the images B'_{nu,n} g_k.
// Every image shares one exponent and so does every target, so each is
// sampled once per node set.
LevelCoefficients level_coefficients(const std::vector<int>& ms, int n, const SParam& sp,
                                     const QuadRule1D& rule1d, const QuadRule2D& rule2d,
                                     int basis_size) {
  std::vector<ComplexEnvelopedFn> images;
  images.reserve(static_cast<std::size_t>(basis_size));
  for (int k = 0; k < basis_size; ++k) images.push_back(image_Bprime(g_enveloped(k, sp.nu()), n, sp, rule1d));
  const GramMatrix gram = gram_Hs(images, sp, rule2d);

  std::vector<ExpPoly> targets;
  for (int m : ms) targets.push_back(psi_mn_exppoly(m, n, sp));
  const QuadExponent pair_exponent =
      psi_exppoly(0, sp).exponent() + images.front().exponent.conj() + omega_exponent(sp);
  const SampledRule sampled = sample_gaussian_rule(pair_exponent, rule2d);

  const auto size = static_cast<Eigen::Index>(basis_size);
  const auto cols = static_cast<Eigen::Index>(ms.size());
  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(size, cols);
  for (std::size_t node = 0; node < sampled.z.size(); ++node) {
    const cplx z = sampled.z[node];
    for (Eigen::Index j = 0; j < size; ++j) {
      const cplx b = sampled.weight[node] * std::conj(images[static_cast<std::size_t>(j)].stripped(z));
      for (Eigen::Index c = 0; c < cols; ++c) rhs(j, c) += targets[static_cast<std::size_t>(c)].poly().eval(z) * b;
    }
  }

  // <target, b_j> = sum_k c_k <b_k, b_j>, i.e. G^T c = rhs.
  Eigen::MatrixXcd lhs(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index k = 0; k < size; ++k) lhs(j, k) = gram(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(lhs);
  qr.setThreshold(1e-10);
  LevelCoefficients out;
  out.coeffs = qr.solve(rhs);
  std::ostringstream note;
  note << "n=" << n << ": gram rank " << qr.rank() << "/" << size
       << ", |G-I|=" << gram.deviation_from_identity();
  for (Eigen::Index c = 0; c < cols; ++c) {
    note << ", |c_m" << ms[static_cast<std::size_t>(c)] << "|^2=" << out.coeffs.col(c).squaredNorm();
  }
  out.note = note.str();
  return out;
}

CheckReport independence_report(int m, int n1, int n2, const SParam& sp, int basis_size) {
  CheckReport report;
  report.name = "n_independence";
  report.exploratory = true;
  report.params = {{"m", std::int64_t{m}},
                   {"n1", std::int64_t{n1}},
                   {"n2", std::int64_t{n2}},
                   {"s", sp.s()},
                   {"basis", std::int64_t{basis_size}}};
  report.tolerance = 1e-6;
  return report;
}

}  // namespace

std::vector<CheckReport> check_n_independence_scan(const std::vector<int>& ms,
                                                   const std::vector<std::pair<int, int>>& pairs,
                                                   const SParam& sp, const QuadRule1D& rule1d,
                                                   const QuadRule2D& rule2d, int basis_size) {
  if (basis_size < 1) throw std::invalid_argument("check_n_independence: empty basis");
  for (int m : ms) {
    if (m < 0 || m > kMaxSymbolicM) throw std::invalid_argument("check_n_independence: m out of range");
  }
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a > kMaxSymbolicN || b > kMaxSymbolicN) {
      throw std::invalid_argument("check_n_independence: n out of range");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  std::map<int, LevelCoefficients> levels;
  std::string failure;
  for (const auto& [a, b] : pairs) {
    for (int n : {a, b}) {
      if (levels.count(n) || !failure.empty()) continue;
      try {
        levels.emplace(n, level_coefficients(ms, n, sp, rule1d, rule2d, basis_size));
      } catch (const std::exception& e) {
        failure = e.what();
      }
    }
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::vector<CheckReport> out;
  for (const auto& [a, b] : pairs) {
    for (std::size_t c = 0; c < ms.size(); ++c) {
      CheckReport report = independence_report(ms[c], a, b, sp, basis_size);
      if (!failure.empty()) {
        report.max_abs_error = std::numeric_limits<double>::quiet_NaN();
        report.note = "failed: " + failure;
      } else {
        const auto& la = levels.at(a);
        const auto& lb = levels.at(b);
        const auto col = static_cast<Eigen::Index>(c);
        report.max_abs_error = (la.coeffs.col(col) - lb.coeffs.col(col)).cwiseAbs().maxCoeff();
        report.note = (a == b) ? la.note : la.note + "; " + lb.note;
      }
      report.wall_time_ms = elapsed / static_cast<double>(pairs.size() * ms.size());
      report.settle();
      out.push_back(std::move(report));
    }
  }
  return out;
}

CheckReport check_n_independence(int m, int n1, int n2, const SParam& sp,
                                 const QuadRule1D& rule1d, const QuadRule2D& rule2d,
                                 int basis_size) {
  return check_n_independence_scan({m}, {{n1, n2}}, sp, rule1d, rule2d, basis_size).front();
}

}  // namespace hermfock
