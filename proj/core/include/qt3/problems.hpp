#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qt3/jet.hpp"
#include "qt3/special.hpp"

namespace qt3 {

/// A benchmark initial value problem with its field, horizon, default
/// tracking window, and (when available) closed-form exact solution.
struct Problem {
  std::string name;
  ScalarField field;
  double y0 = 0.0;
  double T = 0.0;
  double A = 0.0;  // default window lower bound
  double B = 0.0;  // default window upper bound
  std::function<double(double)> exact;  // null when no closed form is known

  bool has_exact() const noexcept { return static_cast<bool>(exact); }
};

/// The seven built-in problems: logistic, bernoulli_small, bernoulli_one,
/// gompertz, flame, sine, blowup_demo.
const std::vector<Problem>& builtin_problems();

/// Lookup by CLI-facing name. Throws std::invalid_argument on miss.
const Problem& find_problem(std::string_view name);

/// The closed-form exact solution at time t. Throws std::invalid_argument
/// when the problem has none.
double exact_solution(const Problem& p, double t);

}  // namespace qt3
