#include "qt3/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qt3 {

double lambert_w0(double x) {
  if (x < 0.0) {
    throw std::domain_error("lambert_w0 requires x >= 0, got " +
                            std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  double w = std::log1p(x);
  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double r = w * ew - x;
    if (std::abs(r) <= 1e-14 * (1.0 + x)) return w;
    // Halley update for g(w) = w e^w - x.
    const double gp = ew * (w + 1.0);
    w -= r / (gp - (w + 2.0) * r / (2.0 * (w + 1.0)));
  }
  throw std::runtime_error("lambert_w0 failed to converge for x = " +
                           std::to_string(x));
}

double arccot_real(double x) {
  if (x > 0.0) return std::atan(1.0 / x);
  if (x < 0.0) return std::atan(1.0 / x) + M_PI;
  return M_PI / 2.0;
}

}  // namespace qt3
