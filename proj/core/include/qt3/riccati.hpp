#pragma once

#include "qt3/jet.hpp"

namespace qt3 {

/// Coefficients of the quadratic Taylor model of f at a state y:
/// a = f''(y)/2, b = f'(y), c = f(y), delta = b^2 - 4ac.
struct QuadraticModel {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double delta = 0.0;
};

inline QuadraticModel make_model(double a, double b, double c) {
  return {a, b, c, b * b - 4.0 * a * c};
}

QuadraticModel quadratic_model(const ScalarField& field, double y);

enum class BranchKind {
  HyperbolicPlus,  // U+: delta >= 4 tol0, hyperbolic step formula
  TrigMinus,       // U-: delta <= -4 tol0, trigonometric step formula
  NearDegenerate,  // U0: |delta| < 4 tol0, expansion step formula
  Undefined,
};

enum class UndefinedReason {
  None,
  StepExceedsHmax,
  StabilityDenominator,
};

struct Branch {
  BranchKind kind = BranchKind::Undefined;
  UndefinedReason reason = UndefinedReason::None;

  bool defined() const noexcept { return kind != BranchKind::Undefined; }
};

/// Blow-up time of the quadratic-model solution started at w(0) = 0:
///   2/b                                   if delta = 0, b > 0
///   ln((b+sqrt(delta))/(b-sqrt(delta)))/sqrt(delta)
///                                         if delta > 0, sqrt(delta) < b
///   2 arccot(b/sqrt(-delta))/sqrt(-delta) if delta < 0
///   +inf                                  otherwise.
/// Total function; +inf is a valid result. When b - sqrt(delta) underflows
/// while sqrt(delta) < b the limit value +inf is returned.
double h_max(const QuadraticModel& model);

/// Membership of (h, y) in U+ / U- / U0; stability is checked first
/// (2 - h b >= sqrt(tol0)), then the blow-up bound h < h_max.
Branch classify_branch(const QuadraticModel& model, double h, double tol0);

/// One step of the quadratic Taylor method: Phi(h, y) evaluated by the
/// branch formula selected by classify_branch. Throws std::logic_error when
/// the branch is Undefined.
double qt3_step(const QuadraticModel& model, double y, double h, double tol0);

/// Exact maximal solution of w' = a w^2 + b w + c, w(0) = 0, at time t,
/// evaluated through the composition w(t) = c t psi(t alpha, t beta).
/// Independent of the qt3_step code path; serves as its test oracle.
/// Requires 0 <= t < h_max(model).
double riccati_exact(const QuadraticModel& model, double t);

}  // namespace qt3
