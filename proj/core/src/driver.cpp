#include "qt3/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qt3/riccati.hpp"

namespace qt3 {

void IntegratorConfig::validate() const {
  if (!(tol0 > 0.0) || !(tol0 < 1e-3)) {
    throw std::invalid_argument("IntegratorConfig: require 0 < tol0 < 1e-3");
  }
  if (!(h > 0.0) || !(T > 0.0) || h > T) {
    throw std::invalid_argument("IntegratorConfig: require 0 < h <= T");
  }
  if (!(A < B)) {
    throw std::invalid_argument("IntegratorConfig: require A < B");
  }
}

std::string to_string(const TerminationReason& reason) {
  switch (reason.kind) {
    case TerminationKind::Success:
      return "Success";
    case TerminationKind::InitialOutsideWindow:
      return "InitialOutsideWindow";
    case TerminationKind::StepSizeUndefined:
      return "StepSizeUndefined(" + std::to_string(reason.at_step) + ")";
    case TerminationKind::LeftWindow:
      return "LeftWindow(" + std::to_string(reason.at_step) + ")";
  }
  return "Unknown";
}

double scan_max(const std::function<double(double)>& g, double A, double B,
                int grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument("scan_max requires grid_points >= 2");
  }
  const double span = B - A;
  double best = -std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = A + span * i / (grid_points - 1);
    const double val = g(x);
    if (val > best) {
      best = val;
      best_i = i;
    }
  }

  // Golden-section refinement in the cell bracketing the grid argmax.
  double lo = A + span * std::max(best_i - 1, 0) / (grid_points - 1);
  double hi = A + span * std::min(best_i + 1, grid_points - 1) /
                      (grid_points - 1);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = g(x1);
  double f2 = g(x2);
  while (hi - lo > 1e-12 * (1.0 + std::abs(lo) + std::abs(hi))) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = g(x1);
    }
  }
  return std::max({best, f1, f2});
}

double apriori_h0(const ScalarField& field, double A, double B, double tol0,
                  double T, int grid_points) {
  const auto b_fun = [&field](double y) { return field.eval(y).d1; };
  const auto s_fun = [&field](double y) {
    const QuadraticModel m = quadratic_model(field, y);
    return m.b * m.b + std::abs(m.delta);
  };
  const double b_max = scan_max(b_fun, A, B, grid_points);
  const double s_max = scan_max(s_fun, A, B, grid_points);
  if (s_max > tol0 && b_max > tol0) {
    return std::min({2.0 / std::sqrt(s_max), (2.0 - std::sqrt(tol0)) / b_max,
                     T});
  }
  if (s_max > tol0) {
    return std::min(2.0 / std::sqrt(s_max), T);
  }
  return T;
}

Trajectory integrate(const OneStepMethod& method, const ScalarField& field,
                     double y0, const IntegratorConfig& config) {
  config.validate();
  Trajectory traj;
  if (y0 < config.A || y0 > config.B) {
    traj.status = {TerminationKind::InitialOutsideWindow, 0};
    return traj;
  }

  // Number of steps for a full run: largest n with n h <= T, robust to
  // representation error in T/h.
  const double ratio = config.T / config.h;
  const std::size_t total =
      static_cast<std::size_t>(std::floor(ratio + 1e-9));

  traj.t.reserve(total + 1);
  traj.y.reserve(total + 1);
  traj.t.push_back(0.0);
  traj.y.push_back(y0);

  double y = y0;
  for (std::size_t n = 0; n < total; ++n) {
    std::optional<double> candidate;
    try {
      candidate = method.step(field, y, config.h, config.tol0);
    } catch (const EvaluationError& e) {
      throw EvaluationError(std::string(e.what()) + " (integration step " +
                                std::to_string(n) + ")",
                            e.at());
    }
    if (!candidate) {
      if (config.guard_mode == GuardMode::Apriori) {
        throw std::logic_error(
            "integrate: step undefined at step " + std::to_string(n) +
            " in a priori guard mode; h exceeds the promised threshold h0");
      }
      traj.status = {TerminationKind::StepSizeUndefined, n};
      traj.steps_completed = n;
      return traj;
    }
    if (*candidate < config.A || *candidate > config.B) {
      traj.status = {TerminationKind::LeftWindow, n};
      traj.steps_completed = n;
      return traj;
    }
    y = *candidate;
    traj.t.push_back((n + 1) * config.h);
    traj.y.push_back(y);
  }
  traj.status = {TerminationKind::Success, 0};
  traj.steps_completed = total;
  return traj;
}

}  // namespace qt3
