#include "gfbm/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gfbm {

GfbmParams::GfbmParams(double a, double b, double hurst)
    : a_(a), b_(b), hurst_(hurst) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("gfbm params: a and b must be finite");
  }
  if (a == 0.0 && b == 0.0) {
    throw std::invalid_argument("gfbm params: (a, b) = (0, 0) gives the zero process");
  }
  if (!(hurst > 0.0) || !(hurst < 1.0)) {
    std::ostringstream msg;
    msg << "gfbm params: Hurst parameter must lie strictly in (0, 1), got " << hurst;
    throw std::invalid_argument(msg.str());
  }
  var_coef_ = a * a + b * b - (std::exp2(2.0 * hurst) - 2.0) * a * b;
  if (!(var_coef_ > 1e-12)) {
    std::ostringstream msg;
    msg << "gfbm params: variance coefficient a^2+b^2-(2^(2H)-2)ab = " << var_coef_
        << " is not positive for a=" << a << " b=" << b << " H=" << hurst;
    throw std::invalid_argument(msg.str());
  }
}

Regime GfbmParams::regime() const noexcept {
  const double ab = a_ * b_;
  if (ab == 0.0 || hurst_ == 0.5) return Regime::C;
  if ((hurst_ > 0.5 && ab > 0.0) || (hurst_ < 0.5 && ab < 0.0)) return Regime::C;
  return Regime::D;
}

}  // namespace gfbm
