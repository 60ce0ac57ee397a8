// Exploratory checks. They record deviations and never gate a run.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "hermfock/bipoly.hpp"
#include "hermfock/quadrature.hpp"
#include "hermfock/spaces.hpp"
#include "hermfock/transforms.hpp"
#include "suite_internal.hpp"

namespace hermfock::detail {

namespace {

// Polynomial in four independent variables (z, zbar, w, wbar).
class Poly4 {
 public:
  using Exps = std::array<int, 4>;
  enum Var { Z = 0, ZB = 1, W = 2, WB = 3 };

  static Poly4 one() {
    Poly4 p;
    p.terms_[{0, 0, 0, 0}] = 1.0;
    return p;
  }

  Poly4 derivative(Var v) const {
    Poly4 out;
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exps d = e;
      --d[v];
      out.add(d, c * static_cast<double>(e[v]));
    }
    return out;
  }

  // Multiply by sum_k coeffs[k] * var_k.
  Poly4 times_linear(const std::array<cplx, 4>& coeffs) const {
    Poly4 out;
    for (const auto& [e, c] : terms_) {
      for (int v = 0; v < 4; ++v) {
        if (coeffs[v] == 0.0) continue;
        Exps d = e;
        ++d[v];
        out.add(d, c * coeffs[v]);
      }
    }
    return out;
  }

  Poly4& operator+=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  Poly4& operator*=(cplx s) {
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  cplx eval(cplx z, cplx w) const {
    const std::array<cplx, 4> x{z, std::conj(z), w, std::conj(w)};
    cplx acc = 0.0;
    for (const auto& [e, c] : terms_) {
      cplx t = c;
      for (int v = 0; v < 4; ++v) t *= std::pow(x[v], e[v]);
      acc += t;
    }
    return acc;
  }

  // p(z - w, zbar - wbar) for a BiPoly p.
  static Poly4 difference_of(const BiPoly& p) {
    Poly4 out;
    const Poly4 dz = Poly4::one().times_linear({1.0, 0.0, -1.0, 0.0});
    const Poly4 dzb = Poly4::one().times_linear({0.0, 1.0, 0.0, -1.0});
    for (const auto& [mono, coeff] : p.terms()) {
      Poly4 term = Poly4::one();
      for (int i = 0; i < mono.z; ++i) term = term.times(dz);
      for (int i = 0; i < mono.zbar; ++i) term = term.times(dzb);
      term *= coeff;
      out += term;
    }
    return out;
  }

  Poly4 times(const Poly4& o) const {
    Poly4 out;
    for (const auto& [a, ca] : terms_) {
      for (const auto& [b, cb] : o.terms_) {
        out.add({a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}, ca * cb);
      }
    }
    return out;
  }

  friend double max_relative_diff(const Poly4& p, const Poly4& q) {
    double worst = 0.0;
    auto scan = [&](const Poly4& a, const Poly4& b) {
      for (const auto& [e, c] : a.terms_) {
        const auto it = b.terms_.find(e);
        const cplx other = it == b.terms_.end() ? cplx(0.0) : it->second;
        const double scale = std::max(std::abs(c), std::abs(other));
        if (scale > 0.0) worst = std::max(worst, std::abs(c - other) / scale);
      }
    };
    scan(p, q);
    scan(q, p);
    return worst;
  }

 private:
  void add(const Exps& e, cplx c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }

  std::map<Exps, cplx> terms_;
};

// Applies, n times each, the operators p -> -d_a p + lin_a * p and
// p -> -d_b p + lin_b * p (sign = -1) or p -> d p + lin p (sign = +1).
Poly4 apply_pair(int n, Poly4::Var a, const std::array<cplx, 4>& lin_a, Poly4::Var b,
                 const std::array<cplx, 4>& lin_b, double derivative_sign) {
  Poly4 p = Poly4::one();
  for (int i = 0; i < n; ++i) {
    Poly4 next = p.derivative(a);
    next *= derivative_sign;
    next += p.times_linear(lin_a);
    p = next;
  }
  for (int i = 0; i < n; ++i) {
    Poly4 next = p.derivative(b);
    next *= derivative_sign;
    next += p.times_linear(lin_b);
    p = next;
  }
  return p;
}

// The transform scans integrate polynomial x Gaussian images whose inner
// oscillation stays mild, so smaller rules than the gated checks use give
// the same numbers to roundoff at a fraction of the cost.
int scan_order_1d(const SuiteConfig& cfg) { return std::min(cfg.quad_order_1d, 64); }
int scan_order_2d(const SuiteConfig& cfg) { return std::min(cfg.quad_order_2d, 48); }

}  // namespace

void add_exploratory_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks) {
  // Difference identities for H^nu_{n,n}(z - w, zbar - wbar).
  for (double s : cfg.s_values) {
    tasks.push_back([&cfg, s] {
      const SParam sp(s);
      const double nu = sp.nu();
      std::vector<CheckReport> out;
      for (int n = 0; n <= cfg.max_n; ++n) {
        const ParamMap params{{"s", s}, {"n", std::int64_t{n}}};
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const Poly4 target = Poly4::difference_of(complex_hermite_rodrigues(n, n, nu));

        // Creation operators in z and (conjugated) in w around
        // exp(-(alpha - 1/2)(z^2 + wbar^2) + nu z wbar); the Gaussian factors
        // cancel, leaving -d p + nu (zbar - wbar) p and -d p + nu (w - z) p.
        out.push_back(run_check(cfg, "hnn_identity_nabla", params, [&](MaxError& err, CheckReport& rep) {
          Poly4 p = apply_pair(n, Poly4::Z, {0.0, nu, 0.0, -nu}, Poly4::WB, {-nu, 0.0, nu, 0.0}, -1.0);
          p *= sign;
          err.add(max_relative_diff(p, target));
          rep.note = "coefficient-wise relative difference";
        }, true));

        // Literal exponential form: prefactor exp(nu(|z|^2 + |w|^2 - z wbar)),
        // inner exp(-nu(|z|^2 + |w|^2 + z wbar)). The exponentials leave
        // exp(-2 nu z wbar) behind, so compare pointwise.
        out.push_back(run_check(cfg, "hnn_identity_exponential", params, [&](MaxError& err, CheckReport& rep) {
          Poly4 p = apply_pair(n, Poly4::Z, {0.0, -nu, 0.0, -nu}, Poly4::WB, {-nu, 0.0, -nu, 0.0}, 1.0);
          p *= sign;
          const auto pts = square_grid(-1.0, 1.0, 3);
          for (cplx z : pts) {
            for (cplx w : pts) {
              const cplx lhs = target.eval(z, w);
              const cplx rhs = p.eval(z, w) * std::exp(-2.0 * nu * z * std::conj(w));
              err.add(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
            }
          }
          rep.note = "pointwise on a 3x3x3x3 grid in [-1,1]^4, relative to max(1,|H|)";
        }, true));

        // Same with the inner exponent's z wbar sign flipped to match the
        // prefactor; the exponentials then cancel exactly.
        out.push_back(run_check(cfg, "hnn_identity_exponential_sign_flipped", params,
                                [&](MaxError& err, CheckReport& rep) {
          Poly4 p = apply_pair(n, Poly4::Z, {0.0, -nu, 0.0, nu}, Poly4::WB, {nu, 0.0, -nu, 0.0}, 1.0);
          p *= sign;
          err.add(max_relative_diff(p, target));
          rep.note = "coefficient-wise relative difference";
        }, true));
      }
      return out;
    });
  }

  // Which reading of H^nu_n makes the standard transform's images orthonormal.
  for (double s : cfg.s_values) {
    for (auto conv : {HermiteNuConvention::plain, HermiteNuConvention::scaled_argument,
                      HermiteNuConvention::scaled_normalized}) {
      tasks.push_back([&cfg, s, conv] {
        const SParam sp(s);
        const int max_m = std::min(cfg.max_m, 4);
        std::vector<CheckReport> out;
        for (int n = 0; n <= std::min(cfg.max_n, 2); ++n) {
          const ParamMap params{{"s", s},
                                {"n", std::int64_t{n}},
                                {"max_m", std::int64_t{max_m}},
                                {"convention", std::string(convention_name(conv))},
                                {"quad_1d", std::int64_t{scan_order_1d(cfg)}},
                                {"quad_2d", std::int64_t{scan_order_2d(cfg)}}};
          out.push_back(run_check(cfg, "hermite_nu_convention", params, [&](MaxError& err, CheckReport& rep) {
            std::vector<ComplexEnvelopedFn> images;
            for (int m = 0; m <= max_m; ++m) {
              images.push_back(image_standard_Bn(g_enveloped(m, sp.nu()), n, sp.nu(),
                                                 gauss_hermite_cached(scan_order_1d(cfg)), conv));
            }
            const GramMatrix g = gram_Lnu_C(images, sp.nu(), make_rule_2d(scan_order_2d(cfg)));
            err.add(g.deviation_from_identity());
            std::ostringstream note;
            note << "gram diagonal:";
            for (std::size_t i = 0; i < g.size; ++i) note << ' ' << g(i, i).real();
            rep.note = note.str();
          }, true));
        }
        return out;
      });
    }
  }

  // Inverse images of psi_{m,n} under the twisted standard transform.
  for (double s : cfg.s_values) {
    tasks.push_back([&cfg, s] {
      const SParam sp(s);
      const int top = std::min(cfg.max_n, 2);
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a <= top; ++a) {
        for (int b = a; b <= top; ++b) pairs.emplace_back(a, b);
      }
      std::vector<int> ms;
      for (int m = 0; m <= std::min(cfg.max_m, 2); ++m) ms.push_back(m);
      return check_n_independence_scan(ms, pairs, sp, gauss_hermite_cached(scan_order_1d(cfg)),
                                       make_rule_2d(scan_order_2d(cfg)));
    });
  }
}

}  // namespace hermfock::detail
