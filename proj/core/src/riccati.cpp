#include "qt3/riccati.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qt3/special.hpp"

namespace qt3 {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

QuadraticModel quadratic_model(const ScalarField& field, double y) {
  const Jet2 j = field.eval(y);
  return make_model(j.d2 / 2.0, j.d1, j.v);
}

double h_max(const QuadraticModel& m) {
  if (m.delta == 0.0) {
    return m.b > 0.0 ? 2.0 / m.b : kInf;
  }
  if (m.delta > 0.0) {
    const double s = std::sqrt(m.delta);
    if (s < m.b) {
      const double denom = m.b - s;
      if (denom <= 1e-300) return kInf;  // limit of the formula as c -> 0
      return std::log((m.b + s) / denom) / s;
    }
    return kInf;
  }
  const double s = std::sqrt(-m.delta);
  return 2.0 / s * arccot_real(m.b / s);
}

Branch classify_branch(const QuadraticModel& m, double h, double tol0) {
  if (2.0 - h * m.b < std::sqrt(tol0)) {
    return {BranchKind::Undefined, UndefinedReason::StabilityDenominator};
  }
  if (std::abs(m.delta) < 4.0 * tol0) {
    return {BranchKind::NearDegenerate, UndefinedReason::None};
  }
  if (!(h < h_max(m))) {
    return {BranchKind::Undefined, UndefinedReason::StepExceedsHmax};
  }
  return {m.delta >= 4.0 * tol0 ? BranchKind::HyperbolicPlus
                                : BranchKind::TrigMinus,
          UndefinedReason::None};
}

double qt3_step(const QuadraticModel& m, double y, double h, double tol0) {
  const Branch branch = classify_branch(m, h, tol0);
  switch (branch.kind) {
    case BranchKind::HyperbolicPlus: {
      const double s = std::sqrt(m.delta);
      const double sh = std::sinh(s * h / 2.0);
      const double ch = std::cosh(s * h / 2.0);
      return y + 2.0 * m.c * sh / (s * ch - m.b * sh);
    }
    case BranchKind::TrigMinus: {
      const double s = std::sqrt(-m.delta);
      const double sn = std::sin(s * h / 2.0);
      const double cs = std::cos(s * h / 2.0);
      return y + 2.0 * m.c * sn / (s * cs - m.b * sn);
    }
    case BranchKind::NearDegenerate: {
      const double d = 2.0 - m.b * h;
      return y + 2.0 * m.c * h / d -
             h * h * h * m.c * m.delta / (3.0 * d * d);
    }
    case BranchKind::Undefined:
      break;
  }
  throw std::logic_error("qt3_step called on an undefined branch");
}

double riccati_exact(const QuadraticModel& m, double t) {
  if (!(t >= 0.0) || !(t < h_max(m))) {
    throw std::logic_error("riccati_exact requires 0 <= t < h_max, got t = " +
                           std::to_string(t));
  }
  if (t == 0.0) return 0.0;

  const double u = -t * m.b / 2.0;           // t * alpha
  const double v2 = t * t * m.delta / 4.0;   // (t * beta)^2, signed
  double psi;
  const double onepu = 1.0 + u;
  if (v2 == 0.0 ||
      (std::abs(v2) < 1e-6 && std::abs(v2) <= 1e-4 * std::abs(onepu))) {
    // Degenerate-roots expansion of psi; truncation error O((v2/(1+u))^3).
    psi = 1.0 / onepu - v2 / (3.0 * onepu * onepu) +
          (u + 6.0) * v2 * v2 / (45.0 * onepu * onepu * onepu);
  } else if (v2 > 0.0) {
    const double v = std::sqrt(v2);
    psi = std::sinh(v) / (u * std::sinh(v) + v * std::cosh(v));
  } else {
    const double th = std::sqrt(-v2);
    psi = std::sin(th) / (u * std::sin(th) + th * std::cos(th));
  }
  return m.c * t * psi;
}

}  // namespace qt3
