#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qt3/jet.hpp"
#include "qt3/steppers.hpp"

namespace qt3 {

enum class GuardMode { Runtime, Apriori };

struct IntegratorConfig {
  double tol0 = 1e-14;
  double h = 0.0;
  double T = 0.0;
  double A = 0.0;
  double B = 0.0;
  GuardMode guard_mode = GuardMode::Runtime;

  /// Throws std::invalid_argument if the invariants are violated
  /// (0 < tol0 < 1e-3, 0 < h <= T, A < B).
  void validate() const;
};

enum class TerminationKind {
  Success,
  InitialOutsideWindow,
  StepSizeUndefined,
  LeftWindow,
};

struct TerminationReason {
  TerminationKind kind = TerminationKind::Success;
  std::size_t at_step = 0;
};

std::string to_string(const TerminationReason& reason);

/// Equidistant samples (t_k = k h) with the termination outcome. On failure
/// at step n the trajectory holds exactly the n+1 accepted samples.
struct Trajectory {
  std::vector<double> t;
  std::vector<double> y;
  TerminationReason status;
  std::size_t steps_completed = 0;
};

/// Approximate maximum of g over [A, B]: maximum over a uniform grid of
/// grid_points samples (endpoints included), refined by golden-section
/// search in the cell bracketing the grid argmax. May underestimate the
/// true maximum of adversarial g; raise grid_points for multimodal inputs.
double scan_max(const std::function<double(double)>& g, double A, double B,
                int grid_points = 2049);

/// A priori step-size threshold from the window maxima of b = f' and
/// s = b^2 + |delta|: every 0 < h < h0 keeps the method defined on [A, B].
double apriori_h0(const ScalarField& field, double A, double B, double tol0,
                  double T, int grid_points = 2049);

/// Equidistant integration loop. Rejects y0 outside [A, B]; stops with
/// Success once (n+1)h > T; in runtime guard mode an undefined QT3 step
/// terminates with StepSizeUndefined, in a priori mode it is a contract
/// violation (std::logic_error); a candidate outside [A, B] terminates
/// with LeftWindow before acceptance. Baseline methods skip the step-size
/// integrity check.
Trajectory integrate(const OneStepMethod& method, const ScalarField& field,
                     double y0, const IntegratorConfig& config);

}  // namespace qt3
