#pragma once

#include <utility>
#include <vector>

#include "hermfock/quadrature.hpp"
#include "hermfock/report.hpp"
#include "hermfock/spaces.hpp"

namespace hermfock {

/// A quadrature value with an error estimate: |I_Q - I_{Q/2}| plus a rounding
/// floor proportional to sum |w f|.
struct TransformResult {
  cplx value;
  double estimated_error = 0.0;
};

// ---------------------------------------------------------------------------
// L^2(R) -> H^{2,s}(C)

/// B_s(t, z) = ((1-s^2)/(2 pi s sqrt(s pi)))^{1/2}
///             exp(-t^2/(2s) - z^2/(2s) + sqrt(1-s^2) t z / s).
cplx kernel_B(double t, cplx z, const SParam& sp);

/// s^{1/4} B_s(sqrt(s) t, z).
cplx kernel_Btilde(double t, cplx z, const SParam& sp);

/// int_R B_s(t, z) f(t) dt. The nodes are centred on the real stationary
/// point of the t-exponent, so the linear factor in z never overflows.
TransformResult apply_Bs(const RealEnvelopedFn& f, cplx z, const SParam& sp,
                         const QuadRule1D& rule);

/// int_R Btilde_s(t, z) f(t) dt; maps f_m to phi^s_m.
TransformResult apply_Btilde(const RealEnvelopedFn& f, cplx z, const SParam& sp,
                             const QuadRule1D& rule);

/// z -> [B_s f](z) with its Gaussian growth declared, ready for Gram matrices
/// and for apply_Bs_inverse. Far from the real axis the inner integrand
/// oscillates at frequency ~2|Im z|, so deep compositions want an inner rule
/// of roughly twice the outer order.
ComplexEnvelopedFn image_Bs(const RealEnvelopedFn& f, const SParam& sp, QuadRule1D rule);

/// int_C phi(z) B_s(t, zbar) omega_s(z) dlambda(z).
TransformResult apply_Bs_inverse(const ExpPoly& phi, double t, const SParam& sp,
                                 const QuadRule2D& rule);
TransformResult apply_Bs_inverse(const ComplexEnvelopedFn& phi, double t, const SParam& sp,
                                 const QuadRule2D& rule);
/// Several t at once; phi is sampled only once per node.
std::vector<TransformResult> apply_Bs_inverse(const ComplexEnvelopedFn& phi,
                                              const std::vector<double>& ts, const SParam& sp,
                                              const QuadRule2D& rule);

// ---------------------------------------------------------------------------
// Polyanalytic levels

/// (nu/pi)(nu^n/n!)^{1/2} e^{-alpha z^2}
///   int_C e^{-nu|xi|^2 + alpha xi^2 + nu xibar z} (zbar - xibar)^n psi(xi) dlambda(xi).
TransformResult apply_Wn(const ExpPoly& psi, int n, cplx z, const SParam& sp,
                         const QuadRule2D& rule);

/// Inverse of apply_Wn on the level-n space:
///   (nu/pi)(nu^n/n!)^{1/2} e^{-alpha z^2}
///   int_C e^{-nu|xi|^2 + alpha xi^2 + nu xibar z} (xi - z)^n psi(xi) dlambda(xi),
/// i.e. M_{-alpha} T_{n,0} M_{alpha}.
TransformResult apply_Wn_inverse(const ExpPoly& psi, int n, cplx z, const SParam& sp,
                                 const QuadRule2D& rule);

/// ((-1)^n nu / (pi sqrt(k! n! nu^{k+n})))
///   int_C e^{-nu|xi|^2 + nu xibar z} H^nu_{k,n}(xi - z, xibar - zbar) psi(xi) dlambda(xi).
TransformResult apply_Tkn(const ExpPoly& psi, int k, int n, double nu, cplx z,
                          const QuadRule2D& rule);

// ---------------------------------------------------------------------------
// L^{2,nu}(R) -> level-n space

/// Closed coherent-state kernel
///   S^s_n(x, z) = (nu/(pi s))^{1/4} ((1-s^2)/(2 pi s nu^n n!))^{1/2}
///     exp(-z^2/(2s) - nu(1-s)x^2/(2s) + nu sqrt(2s) x z / s)
///     I^{nu,-nu/2}_n(z, zbar | nu sqrt(2s) x / s).
cplx kernel_S_closed(int n, double x, cplx z, const SParam& sp);

/// int_R f(x) S^s_n(x, z) e^{-nu x^2} dx; maps g^nu_m to psi^s_{m,n}.
TransformResult apply_Sn(const RealEnvelopedFn& f, int n, cplx z, const SParam& sp,
                         const QuadRule1D& rule);
ComplexEnvelopedFn image_Sn(const RealEnvelopedFn& f, int n, const SParam& sp, QuadRule1D rule);

// ---------------------------------------------------------------------------
// Standard polyanalytic Segal-Bargmann transform of weight nu

/// Reading of the one-variable H^nu_n inside the standard transform.
enum class HermiteNuConvention {
  plain,              ///< H_n(u)
  scaled_argument,    ///< H_n(sqrt(nu) u)
  scaled_normalized,  ///< nu^{n/2} H_n(sqrt(nu) u)
};

const char* convention_name(HermiteNuConvention c);
cplx hermite_nu(int n, double nu, cplx u, HermiteNuConvention c);

/// ((nu/pi)^{3/4} / sqrt(2^n nu^n n!))
///   int_R e^{-nu(x - z/sqrt 2)^2} H^nu_n((z + zbar)/sqrt 2 - x) phi(x) dx.
TransformResult apply_standard_Bn(const RealEnvelopedFn& phi, int n, double nu, cplx z,
                                  const QuadRule1D& rule,
                                  HermiteNuConvention c = HermiteNuConvention::scaled_normalized);
ComplexEnvelopedFn image_standard_Bn(
    const RealEnvelopedFn& phi, int n, double nu, QuadRule1D rule,
    HermiteNuConvention c = HermiteNuConvention::scaled_normalized);

/// e^{-alpha z^2} [B^nu_n phi](z).
TransformResult apply_Bprime(const RealEnvelopedFn& phi, int n, cplx z, const SParam& sp,
                             const QuadRule1D& rule,
                             HermiteNuConvention c = HermiteNuConvention::scaled_normalized);
ComplexEnvelopedFn image_Bprime(const RealEnvelopedFn& phi, int n, const SParam& sp,
                                QuadRule1D rule,
                                HermiteNuConvention c = HermiteNuConvention::scaled_normalized);

/// g^nu_m as an enveloped function (envelope 0).
RealEnvelopedFn g_enveloped(int m, double nu);
/// f_m as an enveloped function (envelope 1/2).
RealEnvelopedFn f_enveloped(int m);

/// Expands psi_{m,n} for n = n1 and n = n2 in the images {B'_{nu,n} g^nu_k,
/// k <= basis_size - 1} by a Gram solve and reports the largest difference
/// between the two coefficient vectors. Exploratory: the report is marked so
/// and never gates a run. A rank-deficient Gram is noted, not thrown.
CheckReport check_n_independence(int m, int n1, int n2, const SParam& sp,
                                 const QuadRule1D& rule1d, const QuadRule2D& rule2d,
                                 int basis_size = 8);

/// Batched form: every m against every (n1, n2) pair, one report each. Each
/// level's image basis is built once.
std::vector<CheckReport> check_n_independence_scan(const std::vector<int>& ms,
                                                   const std::vector<std::pair<int, int>>& pairs,
                                                   const SParam& sp, const QuadRule1D& rule1d,
                                                   const QuadRule2D& rule2d, int basis_size = 8);

}  // namespace hermfock
