#include "hermfock/exppoly.hpp"

#include <cmath>

namespace hermfock {

bool RealQuadraticForm::negative_definite() const {
  // [[xx, xy/2], [xy/2, yy]] < 0  <=>  xx < 0 and det > 0.
  const double det = xx * yy - 0.25 * xy * xy;
  return xx < 0.0 && det > 0.0;
}

cplx QuadExponent::eval(cplx z) const {
  const cplx zb = std::conj(z);
  return zz * z * z + bb * zb * zb + mix * z * zb + z_lin * z + b_lin * zb + c0;
}

QuadExponent QuadExponent::conj() const {
  QuadExponent out;
  out.zz = std::conj(bb);
  out.bb = std::conj(zz);
  out.mix = std::conj(mix);
  out.z_lin = std::conj(b_lin);
  out.b_lin = std::conj(z_lin);
  out.c0 = std::conj(c0);
  return out;
}

RealQuadraticForm QuadExponent::real_form() const {
  // z^2 = x^2 - y^2 + 2ixy, zbar^2 = x^2 - y^2 - 2ixy, |z|^2 = x^2 + y^2.
  const cplx sum = zz + bb;
  const cplx diff = zz - bb;
  const cplx lin_sum = z_lin + b_lin;
  const cplx lin_diff = z_lin - b_lin;
  RealQuadraticForm f;
  f.xx = sum.real() + mix.real();
  f.yy = -sum.real() + mix.real();
  f.xy = -2.0 * diff.imag();
  f.x_lin = lin_sum.real();
  f.y_lin = -lin_diff.imag();
  f.constant = c0.real();
  return f;
}

QuadExponent& QuadExponent::operator+=(const QuadExponent& o) {
  zz += o.zz;
  bb += o.bb;
  mix += o.mix;
  z_lin += o.z_lin;
  b_lin += o.b_lin;
  c0 += o.c0;
  return *this;
}

cplx ExpPoly::eval(cplx z) const { return poly_.eval(z) * std::exp(exponent_.eval(z)); }

}  // namespace hermfock
