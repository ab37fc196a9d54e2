#include "qt3/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace qt3 {

namespace {

std::vector<Problem> make_problems() {
  std::vector<Problem> out;

  // y' = y(10 - y), exact 10 e^{10t} / (19 + e^{10t}).
  out.push_back(Problem{
      "logistic",
      ScalarField{"logistic",
                  [](const Jet2& y) { return y * (10.0 - y); },
                  [](double y) {
                    return std::array<double, 3>{y * (10.0 - y), 10.0 - 2.0 * y,
                                                 -2.0};
                  }},
      0.5, 2.0, 0.0, 10.5,
      [](double t) {
        const double e = std::exp(10.0 * t);
        return 10.0 * e / (19.0 + e);
      }});

  const ScalarField bernoulli_field{
      "bernoulli",
      [](const Jet2& y) { return y * (1.0 - pow(y / 20.0, 2)); },
      [](double y) {
        return std::array<double, 3>{y - y * y * y / 400.0,
                                     1.0 - 3.0 * y * y / 400.0,
                                     -3.0 * y / 200.0};
      }};

  // Constant 4e10 - 1 formed exactly (< 2^53).
  const double bern_small_k = 4.0 * 1e10 - 1.0;
  out.push_back(Problem{
      "bernoulli_small", bernoulli_field, 1e-4, 5.0, 0.0, 20.5,
      [bern_small_k](double t) {
        return 20.0 / std::sqrt(bern_small_k * std::exp(-2.0 * t) + 1.0);
      }});
  out.push_back(Problem{
      "bernoulli_one", bernoulli_field, 1.0, 5.0, 0.0, 20.5, [](double t) {
        return 20.0 / std::sqrt(399.0 * std::exp(-2.0 * t) + 1.0);
      }});

  // y' = y ln(30/y). The field is singular at y = 0, so the window is
  // bounded away from zero.
  out.push_back(Problem{
      "gompertz",
      ScalarField{"gompertz",
                  [](const Jet2& y) { return y * log(30.0 / y); },
                  [](double y) {
                    const double l = std::log(30.0 / y);
                    return std::array<double, 3>{y * l, l - 1.0, -1.0 / y};
                  }},
      29.0, 2.0, 0.5, 30.5,
      [](double t) {
        return 30.0 * std::exp(std::exp(-t) * std::log(29.0 / 30.0));
      }});

  out.push_back(Problem{
      "flame",
      ScalarField{"flame",
                  [](const Jet2& y) { return pow(y, 2) - pow(y, 3); },
                  [](double y) {
                    return std::array<double, 3>{y * y - y * y * y,
                                                 2.0 * y - 3.0 * y * y,
                                                 2.0 - 6.0 * y};
                  }},
      0.98, 10.0, 0.0, 1.1,
      [](double t) {
        return 1.0 / (1.0 + lambert_w0(std::exp(1.0 / 49.0 - t) / 49.0));
      }});

  out.push_back(Problem{
      "sine",
      ScalarField{"sine",
                  [](const Jet2& y) { return sin(y); },
                  [](double y) {
                    return std::array<double, 3>{std::sin(y), std::cos(y),
                                                 -std::sin(y)};
                  }},
      0.01, 1.0, 0.0, M_PI,
      [](double t) {
        return 2.0 * std::atan(std::tan(0.005) * std::exp(t));
      }});

  // y' = (y - 100)(1 - y) e^{-y^4}: bounded field whose quadratic model at
  // y = 0 blows up at ln(100)/99. No closed-form solution. The window
  // reaches to -3 because the first quadratic-model step from 0 with a
  // small h lands near -1.74.
  constexpr double lambda = 100.0;
  out.push_back(Problem{
      "blowup_demo",
      ScalarField{"blowup_demo",
                  [](const Jet2& y) {
                    return (y - lambda) * (1.0 - y) * exp(-pow(y, 4));
                  },
                  [](double y) {
                    const double p = (y - lambda) * (1.0 - y);
                    const double pp = -2.0 * y + (1.0 + lambda);
                    const double y3 = y * y * y;
                    const double g = std::exp(-y3 * y);
                    const double gp = -4.0 * y3 * g;
                    const double gpp =
                        (16.0 * y3 * y3 - 12.0 * y * y) * g;
                    return std::array<double, 3>{
                        p * g, pp * g + p * gp, -2.0 * g + 2.0 * pp * gp + p * gpp};
                  }},
      0.0, 2.0, -3.0, 2.0, nullptr});

  return out;
}

}  // namespace

const std::vector<Problem>& builtin_problems() {
  static const std::vector<Problem> problems = make_problems();
  return problems;
}

const Problem& find_problem(std::string_view name) {
  for (const Problem& p : builtin_problems()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

double exact_solution(const Problem& p, double t) {
  if (!p.has_exact()) {
    throw std::invalid_argument("problem '" + p.name +
                                "' has no exact solution");
  }
  return p.exact(t);
}

}  // namespace qt3
