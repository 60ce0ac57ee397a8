// Gated checks: every suite except "exploratory".

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hermfock/bipoly.hpp"
#include "hermfock/hermite.hpp"
#include "hermfock/quadrature.hpp"
#include "hermfock/spaces.hpp"
#include "hermfock/transforms.hpp"
#include "suite_internal.hpp"

namespace hermfock::detail {

namespace {

using std::numbers::pi;

double factorial(int n) { return std::tgamma(n + 1.0); }

// Scale of the explicit Hermite sum: the same terms with absolute values.
// Relative error against this is insensitive to cancellation near zeros.
double explicit_sum_scale(int m, cplx z) {
  double total = 0.0;
  const double r = 2.0 * std::abs(z);
  for (int k = 0; 2 * k <= m; ++k) {
    total += std::exp(std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - 2 * k + 1.0)) *
             std::pow(r, m - 2 * k);
  }
  return std::max(total, 1.0);
}

std::vector<ComplexEnvelopedFn> psi_family(int max_m, const SParam& sp) {
  QuadExponent ex;
  ex.zz = -0.5;
  std::vector<ComplexEnvelopedFn> out;
  for (int m = 0; m <= max_m; ++m) {
    out.push_back({[m, sp](cplx z) { return psi_poly_seq(m, z, sp)[m]; }, ex});
  }
  return out;
}

std::vector<ComplexEnvelopedFn> psi_mn_family(int max_m, int max_n, const SParam& sp) {
  QuadExponent ex;
  ex.zz = -0.5;
  std::vector<ComplexEnvelopedFn> out;
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_m; ++m) {
      out.push_back({[m, n, sp](cplx z) { return psi_mn_poly_seq(m, n, z, sp)[m]; }, ex});
    }
  }
  return out;
}

QuadRule2D rule2d(const SuiteConfig& cfg) { return make_rule_2d(cfg.quad_order_2d); }
const QuadRule1D& rule1d(const SuiteConfig& cfg) { return gauss_hermite_cached(cfg.quad_order_1d); }

// z = x + iy, w = u + iv, each coordinate on {-1.5, 0, 1.5}.
std::vector<std::pair<cplx, cplx>> kernel_grid() {
  const auto pts = square_grid(-1.5, 1.5, 3);
  std::vector<std::pair<cplx, cplx>> out;
  for (cplx z : pts) {
    for (cplx w : pts) out.emplace_back(z, w);
  }
  return out;
}

template <class Fn>
void for_each_s(const SuiteConfig& cfg, std::vector<CheckTask>& tasks, Fn make) {
  for (double s : cfg.s_values) {
    tasks.push_back([&cfg, s, make]() { return make(cfg, SParam(s)); });
  }
}

}  // namespace

// ---------------------------------------------------------------------------

void add_hermite_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks) {
  tasks.push_back([&cfg] {
    const int max_m = std::min(cfg.max_m, 12);
    ParamMap params{{"max_m", std::int64_t{max_m}}, {"points", std::int64_t{100}},
                    {"seed", static_cast<std::int64_t>(cfg.seed)}};
    return std::vector{run_check(cfg, "hermite_cross_oracle", params, [&](MaxError& err, CheckReport&) {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_real_distribution<double> radius(0.0, 1.0);
      std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
      for (int p = 0; p < 100; ++p) {
        const cplx z = std::polar(3.0 * std::sqrt(radius(rng)), angle(rng));
        const HermiteSeq seq = hermite_seq(max_m, z);
        for (int m = 0; m <= max_m; ++m) {
          err.add(std::abs(seq.values[m] - hermite_explicit(m, z)) / explicit_sum_scale(m, z));
        }
      }
    })};
  });

  tasks.push_back([&cfg] {
    constexpr int kMax = 10;
    ParamMap params{{"max_m", std::int64_t{kMax}}, {"nodes", std::int64_t{64}}};
    return std::vector{run_check(cfg, "f_basis_gram", params, [&](MaxError& err, CheckReport&) {
      std::vector<RealEnvelopedFn> fam;
      for (int m = 0; m <= kMax; ++m) fam.push_back(f_enveloped(m));
      err.add(gram_L2nu_R(fam, 0.0, gauss_hermite_cached(64)).deviation_from_identity());
    })};
  });

  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    constexpr int kMax = 10;
    ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{kMax}}, {"nodes", std::int64_t{64}}};
    return std::vector{run_check(c, "g_basis_gram", params, [&](MaxError& err, CheckReport&) {
      std::vector<RealEnvelopedFn> fam;
      for (int m = 0; m <= kMax; ++m) fam.push_back(g_enveloped(m, sp.nu()));
      err.add(gram_L2nu_R(fam, sp.nu(), gauss_hermite_cached(64)).deviation_from_identity());
    })};
  });

  tasks.push_back([&cfg] {
    const int max_n = std::min(cfg.max_m, 12);
    ParamMap params{{"max_n", std::int64_t{max_n}}, {"seed", static_cast<std::int64_t>(cfg.seed)}};
    return std::vector{run_check(cfg, "hprime_kampe_de_feriet", params, [&](MaxError& err, CheckReport&) {
      // H'_n(x, y) = n! sum_k x^{n-2k} y^k / (k! (n-2k)!), the heat polynomial.
      std::mt19937_64 rng(cfg.seed + 1);
      std::uniform_real_distribution<double> u(-1.5, 1.5);
      for (int p = 0; p < 40; ++p) {
        const cplx x(u(rng), u(rng));
        cplx y(u(rng), u(rng));
        if (std::abs(y) < 0.1) y += 0.5;
        for (int n = 0; n <= max_n; ++n) {
          cplx sum = 0.0;
          double scale = 0.0;
          for (int k = 0; 2 * k <= n; ++k) {
            const cplx term = factorial(n) / (factorial(k) * factorial(n - 2 * k)) *
                              std::pow(x, n - 2 * k) * std::pow(y, k);
            sum += term;
            scale += std::abs(term);
          }
          err.add(std::abs(hprime(n, x, y) - sum) / std::max(scale, 1.0));
        }
      }
    })};
  });
}

void add_mehler_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks) {
  for (double lambda : {0.3, 0.5, 0.6}) {
    tasks.push_back([&cfg, lambda] {
      ParamMap params{{"lambda", lambda}, {"terms", std::int64_t{cfg.series_terms}}};
      return std::vector{run_check(cfg, "mehler", params, [&](MaxError& err, CheckReport&) {
        for (int i = 0; i < 5; ++i) {
          for (int j = 0; j < 5; ++j) {
            const double t = -2.0 + i;
            const double z = -2.0 + j;
            err.add(std::abs(mehler_series(lambda, t, z, cfg.series_terms) - mehler_closed(lambda, t, z)));
          }
        }
      })};
    });
  }
}

void add_gram_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks) {
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{c.max_m}}};
    return std::vector{run_check(c, "psi_gram", params, [&](MaxError& err, CheckReport&) {
      const auto fam = psi_family(c.max_m, sp);
      err.add(gram_Hs(fam, sp, rule2d(c)).deviation_from_identity());
    })};
  });
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    const int max_m = std::min(c.max_m, 8);
    ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{max_m}}, {"max_n", std::int64_t{c.max_n}}};
    return std::vector{run_check(c, "psi_mn_gram", params, [&](MaxError& err, CheckReport&) {
      const auto fam = psi_mn_family(max_m, c.max_n, sp);
      err.add(gram_Hs(fam, sp, rule2d(c)).deviation_from_identity());
    })};
  });
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{c.max_m}}};
    return std::vector{run_check(c, "phi_gram", params, [&](MaxError& err, CheckReport&) {
      std::vector<ComplexEnvelopedFn> fam;
      for (int m = 0; m <= c.max_m; ++m) fam.push_back(as_enveloped(phi_exppoly(m, sp)));
      err.add(gram_Hs(fam, sp, rule2d(c)).deviation_from_identity());
    })};
  });
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    const int max_m = std::min(c.max_m, kMaxSymbolicM);
    ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{max_m}}};
    return std::vector{run_check(c, "psi_tilde_gram", params, [&](MaxError& err, CheckReport&) {
      std::vector<ComplexEnvelopedFn> fam;
      for (int m = 0; m <= max_m; ++m) fam.push_back(as_enveloped(psi_tilde_exppoly(m, sp)));
      err.add(gram_Lnu_C(fam, sp.nu(), rule2d(c)).deviation_from_identity());
    })};
  });
}

void add_kernel_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks) {
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    std::vector<CheckReport> out;
    ParamMap params{{"s", sp.s()}, {"terms", std::int64_t{c.series_terms}}};
    out.push_back(run_check(c, "kernel_series_K", params, [&](MaxError& err, CheckReport& rep) {
      int used = 0;
      for (const auto& [z, w] : kernel_grid()) {
        const SeriesValue v = kernel_Kn_series(0, z, w, sp, c.series_terms);
        used = std::max(used, v.terms_used);
        err.add(std::abs(v.value - kernel_K(z, w, sp)));
      }
      rep.note = "max terms used " + std::to_string(used);
    }));
    out.push_back(run_check(c, "kernel_series_phi", params, [&](MaxError& err, CheckReport&) {
      for (const auto& [z, w] : kernel_grid()) {
        err.add(std::abs(kernel_K_phi_series(z, w, sp, c.series_terms).value - kernel_K(z, w, sp)));
      }
    }));
    return out;
  });

  for (int n = 0; n <= std::min(cfg.max_n, 3); ++n) {
    for (double s : cfg.s_values) {
      tasks.push_back([&cfg, s, n] {
        const SParam sp(s);
        ParamMap params{{"s", s}, {"n", std::int64_t{n}}, {"terms", std::int64_t{cfg.series_terms}}};
        return std::vector{run_check(cfg, "kernel_series_Kn", params, [&](MaxError& err, CheckReport& rep) {
          int used = 0;
          for (const auto& [z, w] : kernel_grid()) {
            const SeriesValue v = kernel_Kn_series(n, z, w, sp, cfg.series_terms);
            used = std::max(used, v.terms_used);
            err.add(std::abs(v.value - kernel_Kn(n, z, w, sp)));
          }
          rep.note = "max terms used " + std::to_string(used);
        })};
      });
    }
  }

  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    std::vector<CheckReport> out;
    ParamMap params{{"s", sp.s()}, {"terms", std::int64_t{c.series_terms}}};
    const auto zs = square_grid(-2.0, 2.0, 5, 2.0);
    out.push_back(run_check(c, "kernel_B_series", params, [&](MaxError& err, CheckReport&) {
      for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const auto f = phys_basis_f_seq(c.series_terms, t);
        for (cplx z : zs) {
          const auto p = psi_seq(c.series_terms, z, sp);
          cplx sum = 0.0;
          for (int m = 0; m <= c.series_terms; ++m) sum += f[m] * p[m];
          err.add(std::abs(sum - kernel_B(t, z, sp)));
        }
      }
    }));
    out.push_back(run_check(c, "kernel_Btilde_series", params, [&](MaxError& err, CheckReport&) {
      for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const auto f = phys_basis_f_seq(c.series_terms, t);
        for (cplx z : zs) {
          const auto p = phi_seq(c.series_terms, z, sp);
          cplx sum = 0.0;
          for (int m = 0; m <= c.series_terms; ++m) sum += f[m] * p[m];
          err.add(std::abs(sum - kernel_Btilde(t, z, sp)));
        }
      }
    }));
    out.push_back(run_check(c, "kernel_fock_conjugation", s_param(sp.s()), [&](MaxError& err, CheckReport&) {
      const double alpha = sp.alpha();
      const double nu = sp.nu();
      const KernelFn conj = rkhs_conjugate([nu](cplx z, cplx w) { return fock_kernel(z, w, nu); },
                                           [alpha](cplx z) { return -alpha * z * z; });
      for (const auto& [z, w] : kernel_grid()) {
        const cplx k = kernel_K(z, w, sp);
        err.add(std::abs(conj(z, w) - k) / std::max(1.0, std::abs(k)));
      }
    }));
    out.push_back(run_check(c, "kernel_diagonal", s_param(sp.s()), [&](MaxError& err, CheckReport&) {
      // K_n(z,z) = (nu/pi) exp(nu|z|^2 - 2 alpha Re z^2), positive for every n.
      for (int n = 0; n <= std::min(c.max_n, 3); ++n) {
        for (cplx z : square_grid(-1.5, 1.5, 5)) {
          const double expected =
              sp.nu() / pi * std::exp(sp.nu() * std::norm(z) - 2.0 * sp.alpha() * (z * z).real());
          err.add(std::abs(kernel_Kn(n, z, z, sp) - expected) / expected);
        }
      }
    }));
    return out;
  });

  for (int n = 0; n <= std::min(cfg.max_n, 2); ++n) {
    for (double s : cfg.s_values) {
      tasks.push_back([&cfg, s, n] {
        const SParam sp(s);
        ParamMap params{{"s", s}, {"n", std::int64_t{n}}, {"terms", std::int64_t{cfg.series_terms}}};
        return std::vector{run_check(cfg, "kernel_S_series", params, [&](MaxError& err, CheckReport&) {
          for (double x : {-1.5, -0.75, 0.0, 0.75, 1.5}) {
            const auto g = scaled_basis_g_seq(cfg.series_terms, x, sp.nu());
            for (cplx z : square_grid(-1.5, 1.5, 5, 1.5)) {
              const auto p = psi_mn_seq(cfg.series_terms, n, z, sp);
              cplx sum = 0.0;
              for (int m = 0; m <= cfg.series_terms; ++m) sum += g[m] * p[m];
              err.add(std::abs(sum - kernel_S_closed(n, x, z, sp)));
            }
          }
        })};
      });
    }
  }
}

void add_reproducing_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks) {
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    std::vector<CheckReport> out;
    const auto ws = square_grid(-1.0, 1.0, 3);
    const int max_m = std::min(c.max_m, 6);
    out.push_back(run_check(c, "reproducing_K", {{"s", sp.s()}, {"max_m", std::int64_t{max_m}}},
                            [&](MaxError& err, CheckReport&) {
      for (cplx w : ws) {
        const ExpPoly section = kernel_Kn_section(0, w, sp);
        for (int m = 0; m <= max_m; ++m) {
          err.add(std::abs(inner_Hs(psi_exppoly(m, sp), section, sp, rule2d(c)) - psi(m, w, sp)));
        }
      }
    }));
    const int max_mn = std::min(c.max_m, 4);
    const int max_n = std::min(c.max_n, 2);
    out.push_back(run_check(c, "reproducing_Kn",
                            {{"s", sp.s()}, {"max_m", std::int64_t{max_mn}}, {"max_n", std::int64_t{max_n}}},
                            [&](MaxError& err, CheckReport&) {
      for (int n = 0; n <= max_n; ++n) {
        for (cplx w : ws) {
          const ExpPoly section = kernel_Kn_section(n, w, sp);
          for (int m = 0; m <= max_mn; ++m) {
            err.add(std::abs(inner_Hs(psi_mn_exppoly(m, n, sp), section, sp, rule2d(c)) -
                             psi_mn(m, n, w, sp)));
          }
        }
      }
    }));
    return out;
  });
}

void add_transform_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks) {
  // B_s and its tilde variant, pointwise.
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    std::vector<CheckReport> out;
    const int max_m = std::min(c.max_m, 5);
    const ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{max_m}}};
    const auto zs = square_grid(-2.0, 2.0, 5, 2.0);
    out.push_back(run_check(c, "bs_basis", params, [&](MaxError& err, CheckReport&) {
      for (int m = 0; m <= max_m; ++m) {
        for (cplx z : zs) err.add(std::abs(apply_Bs(f_enveloped(m), z, sp, rule1d(c)).value - psi(m, z, sp)));
      }
    }));
    out.push_back(run_check(c, "btilde_basis", params, [&](MaxError& err, CheckReport&) {
      for (int m = 0; m <= max_m; ++m) {
        for (cplx z : zs) err.add(std::abs(apply_Btilde(f_enveloped(m), z, sp, rule1d(c)).value - phi(m, z, sp)));
      }
    }));
    const int max_inv = std::min(c.max_m, 4);
    out.push_back(run_check(c, "bs_inverse_basis", {{"s", sp.s()}, {"max_m", std::int64_t{max_inv}}},
                            [&](MaxError& err, CheckReport&) {
      const std::vector<double> ts{-2.0, -1.0, 0.0, 1.0, 2.0};
      for (int m = 0; m <= max_inv; ++m) {
        const auto r = apply_Bs_inverse(as_enveloped(psi_exppoly(m, sp)), ts, sp, rule2d(c));
        for (std::size_t j = 0; j < ts.size(); ++j) err.add(std::abs(r[j].value - phys_basis_f(m, ts[j])));
      }
    }));
    return out;
  });

  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    const int max_m = std::min(c.max_m, 6);
    return std::vector{run_check(c, "bs_isometry", {{"s", sp.s()}, {"max_m", std::int64_t{max_m}}},
                                 [&](MaxError& err, CheckReport&) {
      std::vector<ComplexEnvelopedFn> images;
      for (int m = 0; m <= max_m; ++m) images.push_back(image_Bs(f_enveloped(m), sp, rule1d(c)));
      err.add(gram_Hs(images, sp, rule2d(c)).deviation_from_identity());
    })};
  });

  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    const int max_m = std::min(c.max_m, 4);
    // Far from the real axis the image integrand oscillates faster than the
    // outer rule's extent; the inner rule is doubled to resolve it.
    const int inner = std::min(2 * c.quad_order_1d, kMaxQuadOrder);
    ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{max_m}}, {"inner_order", std::int64_t{inner}}};
    return std::vector{run_check(c, "bs_round_trip", params, [&](MaxError& err, CheckReport&) {
      const std::vector<double> ts{-2.0, -1.0, 0.0, 1.0, 2.0};
      for (int m = 0; m <= max_m; ++m) {
        const auto image = image_Bs(f_enveloped(m), sp, gauss_hermite_cached(inner));
        const auto r = apply_Bs_inverse(image, ts, sp, rule2d(c));
        for (std::size_t j = 0; j < ts.size(); ++j) err.add(std::abs(r[j].value - phys_basis_f(m, ts[j])));
      }
    })};
  });

  // Polyanalytic levels via W_n and T_{k,n}.
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    std::vector<CheckReport> out;
    const int max_m = std::min(c.max_m, 4);
    const int max_n = std::min(c.max_n, 2);
    const ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{max_m}}, {"max_n", std::int64_t{max_n}}};
    const auto zs = square_grid(-1.0, 1.0, 3);
    out.push_back(run_check(c, "wn_basis", params, [&](MaxError& err, CheckReport&) {
      for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
          const ExpPoly target = psi_mn_exppoly(m, n, sp);
          for (cplx z : zs) err.add(std::abs(apply_Wn(psi_exppoly(m, sp), n, z, sp, rule2d(c)).value - target.eval(z)));
        }
      }
    }));
    out.push_back(run_check(c, "wn_round_trip", params, [&](MaxError& err, CheckReport&) {
      for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
          const ExpPoly level = psi_mn_exppoly(m, n, sp);
          for (cplx z : zs) err.add(std::abs(apply_Wn_inverse(level, n, z, sp, rule2d(c)).value - psi(m, z, sp)));
        }
      }
    }));
    out.push_back(run_check(c, "tkn_conjugation", params, [&](MaxError& err, CheckReport&) {
      for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
          for (cplx z : zs) {
            const cplx t = apply_Tkn(psi_tilde_exppoly(m, sp), 0, n, sp.nu(), z, rule2d(c)).value;
            const cplx w = apply_Wn(psi_exppoly(m, sp), n, z, sp, rule2d(c)).value;
            err.add(std::abs(m_alpha_factor(z, sp, MSign::minus) * t - w));
          }
        }
      }
    }));
    out.push_back(run_check(c, "tkn_creation", params, [&](MaxError& err, CheckReport&) {
      const double nu = sp.nu();
      for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
          // Normalized monomial of the weight-nu Fock space.
          const BiPoly e_m = BiPoly::monomial(m, 0, std::pow(nu, 0.5 * (m + 1)) / std::sqrt(pi * factorial(m)));
          const BiPoly expected = (1.0 / std::sqrt(std::pow(nu, n) * factorial(n))) * nabla_power(e_m, OperatorParams(nu), n);
          for (cplx z : zs) {
            err.add(std::abs(apply_Tkn(ExpPoly(e_m, {}), 0, n, nu, z, rule2d(c)).value - expected.eval(z)));
          }
        }
      }
    }));
    return out;
  });

  // Coherent-state transform.
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    std::vector<CheckReport> out;
    const int max_m = std::min(c.max_m, 5);
    const int max_n = std::min(c.max_n, 2);
    const ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{max_m}}, {"max_n", std::int64_t{max_n}}};
    out.push_back(run_check(c, "sn_basis", params, [&](MaxError& err, CheckReport&) {
      for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
          for (cplx z : square_grid(-1.5, 1.5, 5, 1.5)) {
            err.add(std::abs(apply_Sn(g_enveloped(m, sp.nu()), n, z, sp, rule1d(c)).value - psi_mn(m, n, z, sp)));
          }
        }
      }
    }));
    out.push_back(run_check(c, "sn_isometry", params, [&](MaxError& err, CheckReport&) {
      std::vector<ComplexEnvelopedFn> images;
      for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) images.push_back(image_Sn(g_enveloped(m, sp.nu()), n, sp, rule1d(c)));
      }
      err.add(gram_Hs(images, sp, rule2d(c)).deviation_from_identity());
    }));
    return out;
  });

  // Standard transform of weight nu and its M_{-alpha} twist.
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    std::vector<CheckReport> out;
    const int max_m = std::min(c.max_m, 4);
    const int max_n = std::min(c.max_n, 2);
    const ParamMap params{{"s", sp.s()},
                          {"max_m", std::int64_t{max_m}},
                          {"max_n", std::int64_t{max_n}},
                          {"convention", std::string(convention_name(HermiteNuConvention::scaled_normalized))}};
    out.push_back(run_check(c, "standard_bn_gram", params, [&](MaxError& err, CheckReport&) {
      for (int n = 0; n <= max_n; ++n) {
        std::vector<ComplexEnvelopedFn> images;
        for (int m = 0; m <= max_m; ++m) images.push_back(image_standard_Bn(g_enveloped(m, sp.nu()), n, sp.nu(), rule1d(c)));
        err.add(gram_Lnu_C(images, sp.nu(), rule2d(c)).deviation_from_identity());
      }
    }));
    out.push_back(run_check(c, "bprime_levels", params, [&](MaxError& err, CheckReport&) {
      // Every level's psi_{m,n'} in one family, so each image is sampled once.
      QuadExponent ex;
      ex.zz = -0.5;
      std::vector<ComplexEnvelopedFn> targets;
      for (int n2 = 0; n2 <= max_n; ++n2) {
        for (int m = 0; m <= max_m; ++m) {
          targets.push_back({[m, n2, sp](cplx z) { return psi_mn_poly_seq(m, n2, z, sp)[m]; }, ex});
        }
      }
      const auto per_level = static_cast<std::size_t>(max_m) + 1;
      for (int n = 0; n <= max_n; ++n) {
        std::vector<ComplexEnvelopedFn> images;
        for (int k = 0; k <= max_m; ++k) images.push_back(image_Bprime(g_enveloped(k, sp.nu()), n, sp, rule1d(c)));
        const CrossGram g = cross_gram_Hs(images, targets, sp, rule2d(c));
        for (std::size_t i = 0; i < g.rows; ++i) {
          for (std::size_t j = 0; j < g.cols; ++j) {
            if (j / per_level != static_cast<std::size_t>(n)) err.add(std::abs(g(i, j)));
          }
        }
      }
    }));
    return out;
  });
}

void add_eigen_checks(const SuiteConfig& cfg, std::vector<CheckTask>& tasks) {
  constexpr int kMax = 6;
  for_each_s(cfg, tasks, [](const SuiteConfig& c, const SParam& sp) {
    std::vector<CheckReport> out;
    const double nu = sp.nu();
    const ParamMap params{{"s", sp.s()}, {"max_m", std::int64_t{kMax}}, {"max_n", std::int64_t{kMax}}};
    out.push_back(run_check(c, "rodrigues_nabla", params, [&](MaxError& err, CheckReport&) {
      for (int m = 0; m <= kMax; ++m) {
        const BiPoly zm = BiPoly::monomial(m, 0, std::pow(nu, m));
        for (int n = 0; n <= kMax; ++n) {
          err.add(max_relative_coeff_diff(nabla_power(zm, OperatorParams(nu), n),
                                          complex_hermite_rodrigues(m, n, nu)));
        }
      }
    }));
    out.push_back(run_check(c, "delta_nu_eigen", params, [&](MaxError& err, CheckReport&) {
      for (int m = 0; m <= kMax; ++m) {
        for (int n = 0; n <= kMax; ++n) {
          const BiPoly h = complex_hermite_rodrigues(m, n, nu);
          err.add(max_relative_coeff_diff(delta_nu_apply(h, nu), (n * nu) * h));
        }
      }
    }));
    out.push_back(run_check(c, "rodrigues_conjugation", params, [&](MaxError& err, CheckReport&) {
      // H_{m,n} with z and zbar exchanged is H_{n,m}; for real nu this is
      // conj(H_{m,n}(z)).
      for (int m = 0; m <= kMax; ++m) {
        for (int n = 0; n <= kMax; ++n) {
          const BiPoly a = complex_hermite_rodrigues(m, n, nu);
          const BiPoly b = complex_hermite_rodrigues(n, m, nu);
          BiPoly swapped;
          for (const auto& [mono, coeff] : a.terms()) swapped.add_term({mono.zbar, mono.z}, coeff);
          err.add(max_relative_coeff_diff(swapped, b));
          for (cplx z : square_grid(-1.0, 1.0, 3)) {
            err.add(std::abs(b.eval(z) - std::conj(a.eval(z))) / std::max(1.0, std::abs(a.eval(z))));
          }
        }
      }
    }));
    out.push_back(run_check(c, "i_poly_recurrence", {{"s", sp.s()}, {"max_n", std::int64_t{kMax}}},
                            [&](MaxError& err, CheckReport&) {
      const double b = -0.5 * nu;
      const cplx shift(0.3, -0.2);
      for (int n = 0; n <= kMax; ++n) {
        const BiPoly p = i_poly(n, nu, b, shift);
        for (cplx z : square_grid(-1.0, 1.0, 3)) {
          const cplx v = p.eval(z);
          err.add(std::abs(i_poly_eval(n, nu, b, shift, z) - v) / std::max(1.0, std::abs(v)));
        }
      }
    }));
    return out;
  });

  tasks.push_back([&cfg] {
    ParamMap params{{"samples", std::int64_t{100}}, {"seed", static_cast<std::int64_t>(cfg.seed)}};
    return std::vector{run_check(cfg, "alpha_nu_identity", params, [&](MaxError& err, CheckReport&) {
      std::mt19937_64 rng(cfg.seed + 2);
      // Evaluating alpha^2 - nu^2/4 loses about eps * alpha^2 to cancellation,
      // so the samples stay where alpha is moderate.
      std::uniform_real_distribution<double> u(0.1, 0.9);
      std::vector<double> ss = cfg.s_values;
      for (int i = 0; i < 100; ++i) ss.push_back(u(rng));
      for (double s : ss) {
        const SParam sp(s);
        err.add(std::abs(sp.alpha() * sp.alpha() - 0.25 * sp.nu() * sp.nu() - 0.25));
      }
    })};
  });
}

}  // namespace hermfock::detail
