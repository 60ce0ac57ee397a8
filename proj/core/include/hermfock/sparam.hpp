#pragma once

namespace hermfock {

/// Deformation parameter s in (0,1) with its derived constants
///   alpha = (1 + s^2) / (4s),   nu = (1 - s^2) / (2s).
/// alpha^2 - (nu/2)^2 = 1/4 for every admissible s.
class SParam {
 public:
  /// Throws std::invalid_argument unless 0 < s < 1.
  explicit SParam(double s);

  double s() const { return s_; }
  double alpha() const { return alpha_; }
  double nu() const { return nu_; }

 private:
  double s_;
  double alpha_;
  double nu_;
};

inline SParam make_sparam(double s) { return SParam(s); }

}  // namespace hermfock
