#include "qt3/steppers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qt3/riccati.hpp"

namespace qt3 {

void ButcherTableau::validate() const {
  const std::size_t s = stages();
  if (s == 0 || a.size() != s || c.size() != s) {
    throw std::invalid_argument("tableau '" + name + "': inconsistent shape");
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (a[i].size() != s) {
      throw std::invalid_argument("tableau '" + name + "': A must be s x s");
    }
    for (std::size_t j = i; j < s; ++j) {
      if (a[i][j] != 0.0) {
        throw std::invalid_argument("tableau '" + name +
                                    "': A must be strictly lower triangular");
      }
    }
    const double row = std::accumulate(a[i].begin(), a[i].end(), 0.0);
    if (std::abs(row - c[i]) > 1e-15) {
      throw std::invalid_argument("tableau '" + name +
                                  "': row sum does not match c");
    }
  }
  const double bsum = std::accumulate(b.begin(), b.end(), 0.0);
  if (std::abs(bsum - 1.0) > 1e-15) {
    throw std::invalid_argument("tableau '" + name + "': weights must sum to 1");
  }
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return out;
}

}  // namespace

ButcherTableau make_tableau(std::string_view name) {
  const std::string key = lower(name);
  ButcherTableau tab;
  if (key == "k3") {
    tab.name = "K3";
    tab.a = {{0, 0, 0}, {0.5, 0, 0}, {-1.0, 2.0, 0}};
    tab.b = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
    tab.c = {0.0, 0.5, 1.0};
  } else if (key == "bs3") {
    tab.name = "BS3";
    tab.a = {{0, 0, 0, 0},
             {0.5, 0, 0, 0},
             {0.0, 0.75, 0, 0},
             {2.0 / 9.0, 1.0 / 3.0, 4.0 / 9.0, 0}};
    tab.b = {2.0 / 9.0, 1.0 / 3.0, 4.0 / 9.0, 0.0};
    tab.c = {0.0, 0.5, 0.75, 1.0};
  } else if (key == "rk4") {
    tab.name = "RK4";
    tab.a = {{0, 0, 0, 0}, {0.5, 0, 0, 0}, {0.0, 0.5, 0, 0}, {0.0, 0.0, 1.0, 0}};
    tab.b = {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0};
    tab.c = {0.0, 0.5, 0.5, 1.0};
  } else {
    throw std::invalid_argument("unknown tableau '" + std::string(name) + "'");
  }
  tab.validate();
  return tab;
}

double rk_step(const ButcherTableau& tab, const ScalarField& field, double y,
               double h) {
  const std::size_t s = tab.stages();
  std::vector<double> k(s);
  for (std::size_t i = 0; i < s; ++i) {
    double arg = y;
    for (std::size_t j = 0; j < i; ++j) {
      arg += h * tab.a[i][j] * k[j];
    }
    k[i] = field.value(arg);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < s; ++i) acc += tab.b[i] * k[i];
  return y + h * acc;
}

double euler_step(const ScalarField& field, double y, double h) {
  return y + h * field.value(y);
}

double phi1(double z) {
  if (std::abs(z) < 1e-5) {
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
  }
  return std::expm1(z) / z;
}

double rosenbrock_euler_step(const ScalarField& field, double y, double h) {
  const Jet2 j = field.eval(y);
  return y + h * phi1(j.d1 * h) * j.v;
}

OneStepMethod make_method(std::string_view name) {
  const std::string key = lower(name);
  OneStepMethod m;
  if (key == "euler") {
    m = {"Euler", 1, false,
         [](const ScalarField& f, double y, double h, double) {
           return std::optional<double>(euler_step(f, y, h));
         }};
  } else if (key == "rosenbrock_euler" || key == "re") {
    m = {"RE", 2, false,
         [](const ScalarField& f, double y, double h, double) {
           return std::optional<double>(rosenbrock_euler_step(f, y, h));
         }};
  } else if (key == "k3" || key == "bs3" || key == "rk4") {
    const ButcherTableau tab = make_tableau(key);
    const int order = (key == "rk4") ? 4 : 3;
    m = {tab.name, order, false,
         [tab](const ScalarField& f, double y, double h, double) {
           return std::optional<double>(rk_step(tab, f, y, h));
         }};
  } else if (key == "qt3") {
    m = {"QT3", 3, true,
         [](const ScalarField& f, double y, double h,
            double tol0) -> std::optional<double> {
           const QuadraticModel model = quadratic_model(f, y);
           if (!classify_branch(model, h, tol0).defined()) {
             return std::nullopt;
           }
           return qt3_step(model, y, h, tol0);
         }};
  } else {
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
  }
  return m;
}

}  // namespace qt3
