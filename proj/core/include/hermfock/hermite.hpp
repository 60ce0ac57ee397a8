#pragma once

#include <complex>
#include <vector>

namespace hermfock {

using cplx = std::complex<double>;

/// Largest degree the tools accept for pointwise Hermite work. Beyond this
/// |H_m(z)| overflows double range once |z| exceeds roughly 5.
inline constexpr int kMaxHermiteDegree = 64;

/// Default truncation order for the Mehler series.
inline constexpr int kDefaultMehlerTerms = 80;

/// H_0(z), ..., H_{max_degree}(z) for the physicists' Hermite polynomials.
struct HermiteSeq {
  int max_degree = 0;
  std::vector<cplx> values;
};

/// Three-term recurrence H_{m+1} = 2z H_m - 2m H_{m-1}. Throws
/// std::invalid_argument for a negative degree.
HermiteSeq hermite_seq(int max_degree, cplx z);

/// Closed finite sum m! sum_k (-1)^k/k! (2z)^{m-2k}/(m-2k)!. Cancels badly for
/// large |z|; kept as an independent cross-check of hermite_seq.
cplx hermite_explicit(int m, cplx z);

/// H_m(z)/sqrt(2^m m!) for m = 0..max_degree, via the normalized recurrence
/// h_{m+1} = sqrt(2/(m+1)) z h_m - sqrt(m/(m+1)) h_{m-1}. Avoids the factorial
/// growth of the raw recurrence and is the path used by every basis evaluator.
std::vector<cplx> hermite_normalized_seq(int max_degree, cplx z);

/// Orthonormal Hermite function of L^2(R):
///   f_m(t) = exp(-t^2/2) H_m(t) / sqrt(2^m m! sqrt(pi)).
double phys_basis_f(int m, double t);

/// f_0(t), ..., f_{max_degree}(t) computed together.
std::vector<double> phys_basis_f_seq(int max_degree, double t);

/// Rescaled Hermite polynomial orthonormal in L^2(R, exp(-nu x^2) dx):
///   g_m(x) = (nu/pi)^{1/4} H_m(sqrt(nu) x) / sqrt(2^m m!).
/// Throws std::invalid_argument when nu <= 0.
double scaled_basis_g(int m, double x, double nu);

std::vector<double> scaled_basis_g_seq(int max_degree, double x, double nu);

/// Right-hand side of the Mehler formula,
///   (1 - l^2)^{-1/2} exp((-l^2 (t^2 + z^2) + 2 l t z) / (1 - l^2)).
/// Requires 0 < lambda < 1.
cplx mehler_closed(double lambda, cplx t, cplx z);

/// Partial sum sum_{m=0}^{N} lambda^m / (2^m m!) H_m(t) H_m(z).
cplx mehler_series(double lambda, cplx t, cplx z, int terms = kDefaultMehlerTerms);

}  // namespace hermfock
