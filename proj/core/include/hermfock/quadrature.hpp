#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hermfock/exppoly.hpp"
#include "hermfock/sparam.hpp"

namespace hermfock {

inline constexpr int kMinQuadOrder = 1;
inline constexpr int kMaxQuadOrder = 512;
inline constexpr int kDefaultQuadOrder1D = 128;
inline constexpr int kDefaultQuadOrder2D = 96;

/// Raised when an integrand's Gaussian part does not decay in every direction.
class NonIntegrableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Gauss-Hermite rule for the weight exp(-u^2). Nodes are ascending and
/// symmetric. For orders above roughly 350 the outermost weights underflow to
/// zero in double precision; every other weight is strictly positive.
class QuadRule1D {
 public:
  QuadRule1D() = default;
  QuadRule1D(std::vector<double> nodes, std::vector<double> weights);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Nodes from the eigenvalues of the Hermite Jacobi matrix, polished by
/// Newton on the normalized Hermite functions (bisection inside the
/// neighbouring-midpoint bracket if Newton leaves it). Weights from the
/// Christoffel formula. Throws std::invalid_argument unless 1 <= Q <= 512.
QuadRule1D gauss_hermite(int order);

/// Process-wide memoized gauss_hermite; safe to call concurrently.
const QuadRule1D& gauss_hermite_cached(int order);

/// Tensor product rule; the axis dilations are chosen per integrand.
struct QuadRule2D {
  QuadRule1D x;
  QuadRule1D y;
};

QuadRule2D make_rule_2d(int order_x, int order_y);
inline QuadRule2D make_rule_2d(int order) { return make_rule_2d(order, order); }

/// f on R written as stripped(x) * exp(-envelope x^2). The envelope may be zero
/// or negative as long as the combined Gaussian of an integral is positive.
struct RealEnvelopedFn {
  std::function<cplx(double)> stripped;
  double envelope = 0.0;

  cplx operator()(double x) const { return stripped(x) * std::exp(-envelope * x * x); }
};

/// f on C written as stripped(z) * exp(exponent(z, zbar)).
struct ComplexEnvelopedFn {
  std::function<cplx(cplx)> stripped;
  QuadExponent exponent;

  cplx operator()(cplx z) const { return stripped(z) * std::exp(exponent.eval(z)); }
};

ComplexEnvelopedFn as_enveloped(const ExpPoly& f);

// ---------------------------------------------------------------------------
// Raw Gaussian integrals. The callable is passed without its envelope.

/// sum_i w_i f(u_i / sqrt c) / sqrt c  ~  int f(x) exp(-c x^2) dx.
cplx integrate_R(const std::function<cplx(double)>& f, double c, const QuadRule1D& rule);

/// Tensor rule for int f(x + iy) exp(-c_x x^2 - c_y y^2) dx dy.
cplx integrate_C(const std::function<cplx(cplx)>& f, double cx, double cy,
                 const QuadRule2D& rule);

/// Whether the real linear part of the exponent moves the node centre.
enum class LinearShift { none, complete_square };

/// int_C f(z) dlambda(z). The negative-definite real quadratic part of the
/// exponent (after rotation to principal axes) becomes the quadrature
/// envelope; the remainder stripped(z) * exp(exponent - envelope) is what gets
/// sampled, so no positive Gaussian is ever exponentiated on its own. Throws
/// NonIntegrableError if that quadratic part is not negative definite.
cplx integrate_gaussian(const ComplexEnvelopedFn& f, const QuadRule2D& rule,
                        LinearShift shift = LinearShift::complete_square);

/// Nodes used by integrate_gaussian, with weights that already include
/// exp(exponent - envelope); an integral is sum weight[k] * stripped(z[k]).
struct SampledRule {
  std::vector<cplx> z;
  std::vector<cplx> weight;
};

SampledRule sample_gaussian_rule(const QuadExponent& exponent, const QuadRule2D& rule,
                                 LinearShift shift = LinearShift::complete_square);

/// Sum of |w_i| |sampled value| over nodes; the scale of floating-point
/// rounding in integrate_gaussian.
double integrate_gaussian_abs(const ComplexEnvelopedFn& f, const QuadRule2D& rule,
                              LinearShift shift = LinearShift::complete_square);

// ---------------------------------------------------------------------------
// Inner products of the four ambient spaces, linear in the first slot.

/// <f, g> in H^{2,s}(C) = L^2(C, omega_s dlambda).
cplx inner_Hs(const ComplexEnvelopedFn& f, const ComplexEnvelopedFn& g, const SParam& sp,
              const QuadRule2D& rule);
cplx inner_Hs(const ExpPoly& f, const ExpPoly& g, const SParam& sp, const QuadRule2D& rule);

/// <f, g> in L^{2,nu}(C) = L^2(C, exp(-nu|z|^2) dlambda).
cplx inner_Lnu_C(const ComplexEnvelopedFn& f, const ComplexEnvelopedFn& g, double nu,
                 const QuadRule2D& rule);
cplx inner_Lnu_C(const ExpPoly& f, const ExpPoly& g, double nu, const QuadRule2D& rule);

/// <f, g> in L^{2,nu}(R) = L^2(R, exp(-nu x^2) dx). nu = 0 gives L^2(R).
cplx inner_L2nu_R(const RealEnvelopedFn& f, const RealEnvelopedFn& g, double nu,
                  const QuadRule1D& rule);

/// Dense Hermitian Gram matrix G[i][j] = <f_i, f_j>, row-major.
struct GramMatrix {
  std::size_t size = 0;
  std::vector<cplx> entries;

  cplx operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
  /// max |G - I| entrywise.
  double deviation_from_identity() const;
};

/// Gram matrices over a family. When all members share one exponent the
/// stripped parts are sampled once per node; otherwise each pair is
/// integrated separately.
GramMatrix gram_Hs(std::span<const ComplexEnvelopedFn> family, const SParam& sp,
                   const QuadRule2D& rule);
GramMatrix gram_Lnu_C(std::span<const ComplexEnvelopedFn> family, double nu,
                      const QuadRule2D& rule);
/// Rectangular M[i][j] = <f_i, g_j> in H^{2,s}(C), row-major (rows = f).
/// Requires every f to share one exponent and every g to share another, so
/// each function is sampled once per node.
struct CrossGram {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> entries;

  cplx operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  double max_abs() const;
};

CrossGram cross_gram_Hs(std::span<const ComplexEnvelopedFn> f,
                        std::span<const ComplexEnvelopedFn> g, const SParam& sp,
                        const QuadRule2D& rule);

GramMatrix gram_L2nu_R(std::span<const RealEnvelopedFn> family, double nu,
                       const QuadRule1D& rule);

}  // namespace hermfock
