#pragma once

#include <functional>
#include <vector>

#include "hermfock/exppoly.hpp"
#include "hermfock/sparam.hpp"

namespace hermfock {

/// Degree limits for the symbolic psi_{m,n} construction; the polynomial part
/// has O(m n) terms and integer coefficients that grow factorially.
inline constexpr int kMaxSymbolicM = 16;
inline constexpr int kMaxSymbolicN = 8;

/// Default truncation of the kernel expansions sum_m e_m(z) conj(e_m(w)).
inline constexpr int kDefaultKernelTerms = 80;

// ---------------------------------------------------------------------------
// Weight and multiplication operator

/// Exponent alpha(z^2 + zbar^2) - nu|z|^2 of omega_s. In real coordinates its
/// value is s x^2 - y^2 / s.
QuadExponent omega_exponent(const SParam& sp);

/// omega_s(z) = exp(alpha(z^2 + zbar^2) - nu|z|^2), always real and positive.
double weight_omega(cplx z, const SParam& sp);

enum class MSign { plus = 1, minus = -1 };

/// exp(sign * alpha z^2).
cplx m_alpha_factor(cplx z, const SParam& sp, MSign sign);
QuadExponent m_alpha_exponent(const SParam& sp, MSign sign);

// ---------------------------------------------------------------------------
// Bases. Pointwise evaluators use normalized Hermite recurrences; the ExpPoly
// forms are exact symbolic objects for quadrature and operator checks.

/// psi^s_m(z) = ((1-s)/(pi sqrt s))^{1/2} ((1-s)/(1+s))^{m/2}
///              exp(-z^2/2) H_m(z) / sqrt(2^m m!).
cplx psi(int m, cplx z, const SParam& sp);
std::vector<cplx> psi_seq(int max_m, cplx z, const SParam& sp);
ExpPoly psi_exppoly(int m, const SParam& sp);

/// psi^s_m(z) exp(z^2/2), m = 0..max_m: the polynomial factor alone, for
/// quadrature that carries the Gaussian separately.
std::vector<cplx> psi_poly_seq(int max_m, cplx z, const SParam& sp);

/// phi^s_m(z) = (pi m!)^{-1/2} nu^{(m+1)/2} exp(-alpha z^2) z^m.
cplx phi(int m, cplx z, const SParam& sp);
std::vector<cplx> phi_seq(int max_m, cplx z, const SParam& sp);
ExpPoly phi_exppoly(int m, const SParam& sp);

/// exp(alpha z^2) psi^s_m(z); orthonormal in L^2(C, exp(-nu|z|^2)).
cplx psi_tilde(int m, cplx z, const SParam& sp);
ExpPoly psi_tilde_exppoly(int m, const SParam& sp);

/// Polyanalytic basis
///   psi^s_{m,n} = ((1-s)/(pi nu^n n! sqrt s))^{1/2} ((1-s)/(1+s))^{m/2}
///                 exp(-z^2/2) / sqrt(2^m m!) (nabla^n_{nu, alpha-1/2} H_m)(z).
/// Symbolic form; throws std::invalid_argument past kMaxSymbolicM/N.
ExpPoly psi_mn_exppoly(int m, int n, const SParam& sp);

/// Pointwise psi^s_{m,n}(z). Expands nabla^n H_m by Leibniz into
/// I-polynomials times lower Hermite functions, so it is stable for m far
/// beyond the symbolic limit.
cplx psi_mn(int m, int n, cplx z, const SParam& sp);
/// psi^s_{0,n}(z), ..., psi^s_{max_m,n}(z).
std::vector<cplx> psi_mn_seq(int max_m, int n, cplx z, const SParam& sp);
/// psi^s_{m,n}(z) exp(z^2/2), m = 0..max_m.
std::vector<cplx> psi_mn_poly_seq(int max_m, int n, cplx z, const SParam& sp);

// ---------------------------------------------------------------------------
// Reproducing kernels

/// K^s(z,w) = (1-s^2)/(2 pi s) exp(-alpha(z^2 + wbar^2) + nu z wbar).
cplx kernel_K(cplx z, cplx w, const SParam& sp);

/// K^s_n(z,w) = (nu/pi) (-1)^n / (n! nu^n) exp(nu z wbar - alpha(z^2 + wbar^2))
///              H^nu_{n,n}(z - w, zbar - wbar).
cplx kernel_Kn(int n, cplx z, cplx w, const SParam& sp);

/// z -> K^s_n(z, w) as an ExpPoly in z (n = 0 gives K^s).
ExpPoly kernel_Kn_section(int n, cplx w, const SParam& sp);

/// Weight-nu Fock kernel (nu/pi) exp(nu z wbar).
cplx fock_kernel(cplx z, cplx w, double nu);

using KernelFn = std::function<cplx(cplx, cplx)>;
using ExponentFn = std::function<cplx(cplx)>;

/// Kernel of M H for the multiplier M(z) = exp(g(z)):
///   (z, w) -> exp(g(z)) K(z, w) exp(conj(g(w))).
KernelFn rkhs_conjugate(KernelFn kernel, ExponentFn g);

/// Outcome of a truncated kernel expansion.
struct SeriesValue {
  cplx value;
  int terms_used;
};

/// sum_{m <= max_terms} psi_{m,n}(z) conj(psi_{m,n}(w)) (n = 0 gives the psi
/// basis). Stops early once a term falls below 1e-14 and the terms are
/// decreasing.
SeriesValue kernel_Kn_series(int n, cplx z, cplx w, const SParam& sp,
                             int max_terms = kDefaultKernelTerms);
/// Same expansion over the phi basis.
SeriesValue kernel_K_phi_series(cplx z, cplx w, const SParam& sp,
                                int max_terms = kDefaultKernelTerms);

}  // namespace hermfock
