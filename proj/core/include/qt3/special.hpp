#pragma once

namespace qt3 {

/// Principal-branch Lambert W on x >= 0: the w >= 0 with w*e^w = x.
/// Halley iteration from w0 = ln(1+x); converges to residual
/// |w e^w - x| <= 1e-14 (1+x) in a handful of steps.
double lambert_w0(double x);

/// Real arccotangent with range (0, pi).
double arccot_real(double x);

}  // namespace qt3
