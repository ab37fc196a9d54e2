#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qt3/jet.hpp"

namespace qt3 {

/// Explicit Runge-Kutta coefficients. A is strictly lower triangular,
/// sum(b) = 1, and c_i = sum_j a_ij for every built-in tableau.
struct ButcherTableau {
  std::string name;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<double> c;

  std::size_t stages() const noexcept { return b.size(); }

  /// Throws std::invalid_argument on a shape or consistency violation.
  void validate() const;
};

/// Built-in tableaus: "K3", "BS3", "RK4". Throws on an unknown name.
ButcherTableau make_tableau(std::string_view name);

/// One explicit RK step for the autonomous equation y' = f(y).
double rk_step(const ButcherTableau& tab, const ScalarField& field, double y,
               double h);

/// y + h f(y).
double euler_step(const ScalarField& field, double y, double h);

/// (e^z - 1)/z with phi1(0) = 1; series for |z| < 1e-5, expm1 elsewhere.
double phi1(double z);

/// y + h phi1(f'(y) h) f(y); derivatives come from the field's jet.
double rosenbrock_euler_step(const ScalarField& field, double y, double h);

/// Uniform one-step-method surface. The step function returns the next
/// state, or nullopt when the step is undefined at (h, y) (only the
/// guarded QT3 method can be undefined; baselines always produce a value).
struct OneStepMethod {
  std::string name;
  int order = 0;
  bool guarded = false;
  std::function<std::optional<double>(const ScalarField&, double y, double h,
                                      double tol0)>
      step;
};

/// Built-in methods by name (case-insensitive): euler, rosenbrock_euler
/// (alias re), k3, bs3, rk4, qt3. Throws on an unknown name.
OneStepMethod make_method(std::string_view name);

}  // namespace qt3
