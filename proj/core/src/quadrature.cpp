#include "hermfock/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "hermfock/spaces.hpp"

namespace hermfock {

namespace {

// Hermite functions phi_{Q-1}(x), phi_Q(x): orthonormal polynomials for
// exp(-x^2) times exp(-x^2/2). Bounded, so the recurrence never overflows.
std::pair<double, double> hermite_function_pair(int order, double x) {
  double prev = 0.0;
  double cur = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  for (int k = 0; k < order; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

double polish_node(int order, double guess, double lo, double hi) {
  double x = guess;
  const double root_2q = std::sqrt(2.0 * order);
  for (int iter = 0; iter < 8; ++iter) {
    const auto [below, at] = hermite_function_pair(order, x);
    if (below == 0.0) break;
    const double step = at / (root_2q * below);
    const double next = x - step;
    if (!(next > lo && next < hi)) {
      x = std::numeric_limits<double>::quiet_NaN();
      break;
    }
    x = next;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) return x;
  }
  if (!std::isnan(x)) return x;

  // Bisection on the sign of phi_Q inside (lo, hi).
  double a = lo;
  double b = hi;
  double fa = hermite_function_pair(order, a).second;
  for (int iter = 0; iter < 200 && b - a > 1e-16 * std::max(1.0, std::abs(a)); ++iter) {
    const double mid = 0.5 * (a + b);
    const double fm = hermite_function_pair(order, mid).second;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

struct Envelope {
  // (x, y) = centre + R (u / sqrt(l1), v / sqrt(l2))
  double r11 = 1.0, r12 = 0.0, r21 = 0.0, r22 = 1.0;
  double l1 = 1.0, l2 = 1.0;
  double cx = 0.0, cy = 0.0;
};

Envelope build_envelope(const QuadExponent& exponent, LinearShift shift) {
  const RealQuadraticForm form = exponent.real_form();
  if (!form.negative_definite()) {
    throw NonIntegrableError("integrand Gaussian is not decaying: Re exponent = " +
                             std::to_string(form.xx) + " x^2 + " + std::to_string(form.xy) +
                             " xy + " + std::to_string(form.yy) + " y^2");
  }
  Envelope env;
  const double a = form.xx;
  const double b = 0.5 * form.xy;
  const double d = form.yy;
  if (b == 0.0) {
    env.l1 = -a;
    env.l2 = -d;
  } else {
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), b);
    const double e1 = mean + radius;
    const double e2 = mean - radius;
    // eigenvector of e1: (b, e1 - a)
    double vx = b;
    double vy = e1 - a;
    const double norm = std::hypot(vx, vy);
    vx /= norm;
    vy /= norm;
    env.r11 = vx;
    env.r21 = vy;
    env.r12 = -vy;
    env.r22 = vx;
    env.l1 = -e1;
    env.l2 = -e2;
  }
  if (shift == LinearShift::complete_square) {
    // stationary point of the real quadratic: 2 M c + l = 0
    const double det = a * d - b * b;
    env.cx = -0.5 * (d * form.x_lin - b * form.y_lin) / det;
    env.cy = -0.5 * (-b * form.x_lin + a * form.y_lin) / det;
  }
  return env;
}

}  // namespace

SampledRule sample_gaussian_rule(const QuadExponent& exponent, const QuadRule2D& rule,
                                 LinearShift shift) {
  const Envelope env = build_envelope(exponent, shift);
  const double s1 = 1.0 / std::sqrt(env.l1);
  const double s2 = 1.0 / std::sqrt(env.l2);
  const double jac = s1 * s2;
  SampledRule out;
  const auto nx = static_cast<std::size_t>(rule.x.order());
  const auto ny = static_cast<std::size_t>(rule.y.order());
  out.z.reserve(nx * ny);
  out.weight.reserve(nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    const double u = rule.x.nodes()[i];
    const double wu = rule.x.weights()[i];
    const double p = u * s1;
    for (std::size_t j = 0; j < ny; ++j) {
      const double v = rule.y.nodes()[j];
      const double q = v * s2;
      const double x = env.cx + env.r11 * p + env.r12 * q;
      const double y = env.cy + env.r21 * p + env.r22 * q;
      const cplx z(x, y);
      out.z.push_back(z);
      out.weight.push_back(wu * rule.y.weights()[j] * jac * std::exp(exponent.eval(z) + u * u + v * v));
    }
  }
  return out;
}

namespace {

void require_order(int order) {
  if (order < kMinQuadOrder || order > kMaxQuadOrder) {
    throw std::invalid_argument("quadrature order must lie in [1, 512], got " +
                                std::to_string(order));
  }
}

void require_positive_envelope(double c, const char* what) {
  if (!(c > 0.0)) {
    throw NonIntegrableError(std::string(what) + ": combined Gaussian coefficient " +
                             std::to_string(c) + " is not positive");
  }
}

ComplexEnvelopedFn pair_integrand(const ComplexEnvelopedFn& f, const ComplexEnvelopedFn& g,
                                  const QuadExponent& weight) {
  return {[&f, &g](cplx z) { return f.stripped(z) * std::conj(g.stripped(z)); },
          f.exponent + g.exponent.conj() + weight};
}

GramMatrix gram_weighted(std::span<const ComplexEnvelopedFn> family, const QuadExponent& weight,
                         const QuadRule2D& rule) {
  GramMatrix gram;
  gram.size = family.size();
  gram.entries.assign(gram.size * gram.size, 0.0);
  if (family.empty()) return gram;

  const bool shared = std::all_of(family.begin(), family.end(), [&](const auto& f) {
    return f.exponent == family.front().exponent;
  });
  if (!shared) {
    for (std::size_t i = 0; i < gram.size; ++i) {
      for (std::size_t j = i; j < gram.size; ++j) {
        const cplx v = integrate_gaussian(pair_integrand(family[i], family[j], weight), rule);
        gram.entries[i * gram.size + j] = v;
        gram.entries[j * gram.size + i] = std::conj(v);
      }
    }
    return gram;
  }

  const QuadExponent total = family.front().exponent + family.front().exponent.conj() + weight;
  const SampledRule sampled = sample_gaussian_rule(total, rule, LinearShift::complete_square);
  std::vector<std::vector<cplx>> values(gram.size);
  for (std::size_t k = 0; k < gram.size; ++k) {
    values[k].reserve(sampled.z.size());
    for (const cplx z : sampled.z) values[k].push_back(family[k].stripped(z));
  }
  for (std::size_t i = 0; i < gram.size; ++i) {
    for (std::size_t j = i; j < gram.size; ++j) {
      cplx acc = 0.0;
      for (std::size_t node = 0; node < sampled.z.size(); ++node) {
        acc += sampled.weight[node] * values[i][node] * std::conj(values[j][node]);
      }
      gram.entries[i * gram.size + j] = acc;
      gram.entries[j * gram.size + i] = std::conj(acc);
    }
  }
  return gram;
}

QuadExponent lnu_weight(double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("L^{2,nu}(C): nu must be positive");
  QuadExponent q;
  q.mix = -nu;
  return q;
}

}  // namespace

QuadRule1D::QuadRule1D(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size()) {
    throw std::invalid_argument("QuadRule1D: node/weight count mismatch");
  }
}

QuadRule1D gauss_hermite(int order) {
  require_order(order);
  const auto q = static_cast<Eigen::Index>(order);
  std::vector<double> nodes(static_cast<std::size_t>(order));
  if (order > 1) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(q);
    Eigen::VectorXd sub(q - 1);
    for (Eigen::Index k = 1; k < q; ++k) sub[k - 1] = std::sqrt(0.5 * static_cast<double>(k));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& eig = solver.eigenvalues();  // ascending
    for (Eigen::Index k = 0; k < q; ++k) nodes[static_cast<std::size_t>(k)] = eig[k];
  }

  // Polish the non-negative half and mirror it so the rule is exactly symmetric.
  const int half = order / 2;
  std::vector<double> guess = nodes;
  for (int k = order - half; k < order; ++k) {
    const double lo = (k == 0) ? -1e300 : 0.5 * (guess[k - 1] + guess[k]);
    const double hi = (k == order - 1) ? guess[k] + 1.0 : 0.5 * (guess[k] + guess[k + 1]);
    nodes[k] = polish_node(order, guess[k], std::max(lo, 0.0), hi);
    nodes[order - 1 - k] = -nodes[k];
  }
  if (order % 2 == 1) nodes[half] = 0.0;

  std::vector<double> weights(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double x = nodes[k];
    const double below = hermite_function_pair(order, x).first;
    // w = 1 / (Q p_{Q-1}(x)^2), p the orthonormal polynomial.
    const double p = below * std::exp(0.5 * x * x);
    weights[k] = 1.0 / (order * p * p);
  }
  return QuadRule1D(std::move(nodes), std::move(weights));
}

const QuadRule1D& gauss_hermite_cached(int order) {
  require_order(order);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuadRule1D>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<QuadRule1D>(gauss_hermite(order));
  return *slot;
}

QuadRule2D make_rule_2d(int order_x, int order_y) {
  return {gauss_hermite_cached(order_x), gauss_hermite_cached(order_y)};
}

ComplexEnvelopedFn as_enveloped(const ExpPoly& f) {
  return {[poly = f.poly()](cplx z) { return poly.eval(z); }, f.exponent()};
}

cplx integrate_R(const std::function<cplx(double)>& f, double c, const QuadRule1D& rule) {
  require_positive_envelope(c, "integrate_R");
  const double scale = 1.0 / std::sqrt(c);
  cplx acc = 0.0;
  for (int i = 0; i < rule.order(); ++i) acc += rule.weights()[i] * f(rule.nodes()[i] * scale);
  return acc * scale;
}

cplx integrate_C(const std::function<cplx(cplx)>& f, double cx, double cy,
                 const QuadRule2D& rule) {
  require_positive_envelope(cx, "integrate_C (x axis)");
  require_positive_envelope(cy, "integrate_C (y axis)");
  const double sx = 1.0 / std::sqrt(cx);
  const double sy = 1.0 / std::sqrt(cy);
  cplx acc = 0.0;
  for (int i = 0; i < rule.x.order(); ++i) {
    cplx row = 0.0;
    for (int j = 0; j < rule.y.order(); ++j) {
      row += rule.y.weights()[j] * f(cplx(rule.x.nodes()[i] * sx, rule.y.nodes()[j] * sy));
    }
    acc += rule.x.weights()[i] * row;
  }
  return acc * sx * sy;
}

cplx integrate_gaussian(const ComplexEnvelopedFn& f, const QuadRule2D& rule, LinearShift shift) {
  const SampledRule sampled = sample_gaussian_rule(f.exponent, rule, shift);
  cplx acc = 0.0;
  for (std::size_t k = 0; k < sampled.z.size(); ++k) acc += sampled.weight[k] * f.stripped(sampled.z[k]);
  return acc;
}

double integrate_gaussian_abs(const ComplexEnvelopedFn& f, const QuadRule2D& rule,
                              LinearShift shift) {
  const SampledRule sampled = sample_gaussian_rule(f.exponent, rule, shift);
  double acc = 0.0;
  for (std::size_t k = 0; k < sampled.z.size(); ++k) {
    acc += std::abs(sampled.weight[k] * f.stripped(sampled.z[k]));
  }
  return acc;
}

cplx inner_Hs(const ComplexEnvelopedFn& f, const ComplexEnvelopedFn& g, const SParam& sp,
              const QuadRule2D& rule) {
  return integrate_gaussian(pair_integrand(f, g, omega_exponent(sp)), rule);
}

cplx inner_Hs(const ExpPoly& f, const ExpPoly& g, const SParam& sp, const QuadRule2D& rule) {
  return inner_Hs(as_enveloped(f), as_enveloped(g), sp, rule);
}

cplx inner_Lnu_C(const ComplexEnvelopedFn& f, const ComplexEnvelopedFn& g, double nu,
                 const QuadRule2D& rule) {
  return integrate_gaussian(pair_integrand(f, g, lnu_weight(nu)), rule);
}

cplx inner_Lnu_C(const ExpPoly& f, const ExpPoly& g, double nu, const QuadRule2D& rule) {
  return inner_Lnu_C(as_enveloped(f), as_enveloped(g), nu, rule);
}

cplx inner_L2nu_R(const RealEnvelopedFn& f, const RealEnvelopedFn& g, double nu,
                  const QuadRule1D& rule) {
  if (nu < 0.0) throw std::invalid_argument("inner_L2nu_R: nu must be non-negative");
  const double c = f.envelope + g.envelope + nu;
  require_positive_envelope(c, "inner_L2nu_R");
  return integrate_R([&](double x) { return f.stripped(x) * std::conj(g.stripped(x)); }, c, rule);
}

double GramMatrix::deviation_from_identity() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const cplx target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs((*this)(i, j) - target));
    }
  }
  return worst;
}

GramMatrix gram_Hs(std::span<const ComplexEnvelopedFn> family, const SParam& sp,
                   const QuadRule2D& rule) {
  return gram_weighted(family, omega_exponent(sp), rule);
}

GramMatrix gram_Lnu_C(std::span<const ComplexEnvelopedFn> family, double nu,
                      const QuadRule2D& rule) {
  return gram_weighted(family, lnu_weight(nu), rule);
}

double CrossGram::max_abs() const {
  double worst = 0.0;
  for (const cplx v : entries) worst = std::max(worst, std::abs(v));
  return worst;
}

CrossGram cross_gram_Hs(std::span<const ComplexEnvelopedFn> f,
                        std::span<const ComplexEnvelopedFn> g, const SParam& sp,
                        const QuadRule2D& rule) {
  CrossGram out;
  out.rows = f.size();
  out.cols = g.size();
  out.entries.assign(out.rows * out.cols, 0.0);
  if (f.empty() || g.empty()) return out;
  auto shares = [](std::span<const ComplexEnvelopedFn> family) {
    return std::all_of(family.begin(), family.end(),
                       [&](const auto& h) { return h.exponent == family.front().exponent; });
  };
  if (!shares(f) || !shares(g)) {
    throw std::invalid_argument("cross_gram_Hs: each family must share one exponent");
  }
  const QuadExponent total = f.front().exponent + g.front().exponent.conj() + omega_exponent(sp);
  const SampledRule sampled = sample_gaussian_rule(total, rule);
  std::vector<cplx> gv(out.cols);
  for (std::size_t node = 0; node < sampled.z.size(); ++node) {
    const cplx z = sampled.z[node];
    for (std::size_t j = 0; j < out.cols; ++j) gv[j] = sampled.weight[node] * std::conj(g[j].stripped(z));
    for (std::size_t i = 0; i < out.rows; ++i) {
      const cplx fv = f[i].stripped(z);
      for (std::size_t j = 0; j < out.cols; ++j) out.entries[i * out.cols + j] += fv * gv[j];
    }
  }
  return out;
}

GramMatrix gram_L2nu_R(std::span<const RealEnvelopedFn> family, double nu,
                       const QuadRule1D& rule) {
  GramMatrix gram;
  gram.size = family.size();
  gram.entries.assign(gram.size * gram.size, 0.0);
  for (std::size_t i = 0; i < gram.size; ++i) {
    for (std::size_t j = i; j < gram.size; ++j) {
      const cplx v = inner_L2nu_R(family[i], family[j], nu, rule);
      gram.entries[i * gram.size + j] = v;
      gram.entries[j * gram.size + i] = std::conj(v);
    }
  }
  return gram;
}

}  // namespace hermfock
