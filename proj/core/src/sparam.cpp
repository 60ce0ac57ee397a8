#include "hermfock/sparam.hpp"

#include <stdexcept>
#include <string>

namespace hermfock {

SParam::SParam(double s) : s_(s) {
  if (!(s > 0.0 && s < 1.0)) {
    throw std::invalid_argument("s must lie in (0,1), got " + std::to_string(s));
  }
  alpha_ = (1.0 + s * s) / (4.0 * s);
  nu_ = (1.0 - s * s) / (2.0 * s);
}

}  // namespace hermfock
