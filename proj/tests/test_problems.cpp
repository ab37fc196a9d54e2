#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qt3/problems.hpp"
#include "qt3/special.hpp"
#include "test_util.hpp"

using namespace qt3;
using namespace qt3::testutil;

TEST_SUITE_BEGIN("problems");

TEST_CASE("the registry carries the seven built-in problems") {
  const auto& all = builtin_problems();
  REQUIRE(all.size() == 7);
  const char* names[] = {"logistic",  "bernoulli_small", "bernoulli_one",
                         "gompertz",  "flame",           "sine",
                         "blowup_demo"};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(all[i].name == names[i]);
    CHECK(&find_problem(names[i]) == &all[i]);
  }
  CHECK_THROWS_AS((void)find_problem("lorenz"), std::invalid_argument);

  const Problem& logistic = find_problem("logistic");
  CHECK(logistic.y0 == 0.5);
  CHECK(logistic.T == 2.0);
  CHECK(logistic.A == 0.0);
  CHECK(logistic.B == 10.5);

  const Problem& gompertz = find_problem("gompertz");
  CHECK(gompertz.y0 == 29.0);
  CHECK(gompertz.A > 0.0);  // the field is singular at y = 0

  CHECK(find_problem("bernoulli_small").y0 == 1e-4);
  CHECK(find_problem("flame").y0 == 0.98);
  CHECK(find_problem("sine").T == 1.0);
  CHECK_FALSE(find_problem("blowup_demo").has_exact());
}

TEST_CASE("closed-form solutions at spot-check times") {
  const Problem& logistic = find_problem("logistic");
  const double e = std::exp(1.0);
  CHECK(close_rel(exact_solution(logistic, 0.1), 10.0 * e / (19.0 + e),
                  1e-15));

  // flame: 1/(1 + W((1/49) e^{1/49})) = 1/(1 + 1/49) = 0.98 at t = 0.
  CHECK(exact_solution(find_problem("flame"), 0.0) ==
        doctest::Approx(0.98).epsilon(1e-14));

  // bernoulli_small: 20 / sqrt(4e10) = 1e-4 exactly at t = 0.
  CHECK(exact_solution(find_problem("bernoulli_small"), 0.0) ==
        doctest::Approx(1e-4).epsilon(1e-15));

  CHECK(close_rel(exact_solution(find_problem("gompertz"), 1.0),
                  30.0 * std::exp(std::exp(-1.0) * std::log(29.0 / 30.0)),
                  1e-15));

  CHECK_THROWS_AS((void)exact_solution(find_problem("blowup_demo"), 0.5),
                  std::invalid_argument);
}

TEST_CASE("exact solutions satisfy the initial condition") {
  for (const Problem& p : builtin_problems()) {
    if (!p.has_exact()) continue;
    CHECK(std::abs(p.exact(0.0) - p.y0) <= 1e-14 * (1.0 + std::abs(p.y0)));
  }
}

TEST_CASE("exact solutions satisfy the differential equation") {
  for (const Problem& p : builtin_problems()) {
    if (!p.has_exact()) continue;
    for (int i = 1; i < 50; ++i) {
      const double t = p.T * i / 50.0;
      const double y = p.exact(t);
      const auto fd = central_diff5(p.exact, t, 1e-4);
      const double f = p.field.value(y);
      CHECK(std::abs(fd.d1 - f) <= 1e-6 * (1.0 + std::abs(f)));
    }
  }
}

TEST_CASE("every exact solution is nondecreasing on the horizon") {
  for (const Problem& p : builtin_problems()) {
    if (!p.has_exact()) continue;
    double prev = p.exact(0.0);
    for (int i = 1; i <= 1000; ++i) {
      const double cur = p.exact(p.T * i / 1000.0);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("Lambert W fixed points") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lambert_w0(0.5 * std::exp(0.5)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lambert_w0(1.0) == doctest::Approx(0.5671432904097838).epsilon(1e-15));
  CHECK_THROWS_AS((void)lambert_w0(-0.1), std::domain_error);
}

TEST_CASE("Lambert W residual bound over 18 decades") {
  for (int i = 0; i < 1000; ++i) {
    // log-spaced from 1e-12 to 1e6
    const double x = std::pow(10.0, -12.0 + 18.0 * i / 999.0);
    const double w = lambert_w0(x);
    CHECK(std::abs(w * std::exp(w) - x) <= 1e-13 * (1.0 + x));
  }
}

TEST_CASE("real arccotangent") {
  CHECK(arccot_real(0.0) == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
  CHECK(arccot_real(1.0) == doctest::Approx(M_PI / 4.0).epsilon(1e-15));
  CHECK(arccot_real(-1.0) ==
        doctest::Approx(3.0 * M_PI / 4.0).epsilon(1e-15));

  double prev = arccot_real(-50.0);
  CHECK(prev < M_PI);
  for (int i = 1; i <= 200; ++i) {
    const double x = -50.0 + i * 0.5;
    const double cur = arccot_real(x);
    CHECK(cur > 0.0);
    CHECK(cur < prev);  // strictly decreasing
    CHECK(std::abs(1.0 / std::tan(cur) - x) <= 1e-12 * (1.0 + std::abs(x)));
    prev = cur;
  }
}

TEST_SUITE_END();
