#pragma once

#include "hermfock/bipoly.hpp"

namespace hermfock {

/// Real part of a complex quadratic exponent written in x = Re z, y = Im z:
///   xx x^2 + xy x y + yy y^2 + x_lin x + y_lin y + constant.
struct RealQuadraticForm {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
  double x_lin = 0.0;
  double y_lin = 0.0;
  double constant = 0.0;

  /// True when the quadratic part is strictly negative definite.
  bool negative_definite() const;
};

/// Q(z, zbar) = zz z^2 + bb zbar^2 + mix |z|^2 + z_lin z + b_lin zbar + c0.
struct QuadExponent {
  cplx zz = 0.0;
  cplx bb = 0.0;
  cplx mix = 0.0;
  cplx z_lin = 0.0;
  cplx b_lin = 0.0;
  cplx c0 = 0.0;

  cplx eval(cplx z) const;
  /// Exponent of conj(exp(Q(z))).
  QuadExponent conj() const;
  RealQuadraticForm real_form() const;

  QuadExponent& operator+=(const QuadExponent& o);
  friend QuadExponent operator+(QuadExponent a, const QuadExponent& b) { return a += b; }
  friend bool operator==(const QuadExponent&, const QuadExponent&) = default;
};

/// poly(z, zbar) * exp(exponent(z, zbar)). Every basis function and kernel
/// section in this library has this shape; products stay closed.
class ExpPoly {
 public:
  ExpPoly() = default;
  ExpPoly(BiPoly poly, QuadExponent exponent)
      : poly_(std::move(poly)), exponent_(exponent) {}

  const BiPoly& poly() const { return poly_; }
  const QuadExponent& exponent() const { return exponent_; }

  /// Evaluates the exponent before a single exponentiation.
  cplx eval(cplx z) const;
  ExpPoly conj() const { return {poly_.conj(), exponent_.conj()}; }

  /// Multiplies by exp(extra).
  ExpPoly times_exp(const QuadExponent& extra) const { return {poly_, exponent_ + extra}; }

  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    return {a.poly_ * b.poly_, a.exponent_ + b.exponent_};
  }
  friend ExpPoly operator*(cplx s, const ExpPoly& a) { return {s * a.poly_, a.exponent_}; }

 private:
  BiPoly poly_;
  QuadExponent exponent_;
};

}  // namespace hermfock
