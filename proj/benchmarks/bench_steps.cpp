#include <benchmark/benchmark.h>

#include "qt3/driver.hpp"
#include "qt3/problems.hpp"
#include "qt3/riccati.hpp"
#include "qt3/steppers.hpp"

namespace {

using namespace qt3;

void BM_QuadraticModel(benchmark::State& state) {
  const Problem& p = find_problem("logistic");
  double y = p.y0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadratic_model(p.field, y));
  }
}
BENCHMARK(BM_QuadraticModel);

void BM_Qt3Step(benchmark::State& state) {
  const Problem& p = find_problem("logistic");
  const QuadraticModel m = quadratic_model(p.field, p.y0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qt3_step(m, p.y0, 0.01, 1e-14));
  }
}
BENCHMARK(BM_Qt3Step);

void BM_Rk4Step(benchmark::State& state) {
  const Problem& p = find_problem("logistic");
  const ButcherTableau rk4 = make_tableau("RK4");
  for (auto _ : state) {
    benchmark::DoNotOptimize(rk_step(rk4, p.field, p.y0, 0.01));
  }
}
BENCHMARK(BM_Rk4Step);

void BM_IntegrateLogistic(benchmark::State& state) {
  const Problem& p = find_problem("logistic");
  const OneStepMethod m =
      make_method(state.range(0) == 0 ? "qt3" : "rk4");
  const IntegratorConfig config{1e-14, 0.01, p.T, p.A, p.B,
                                GuardMode::Runtime};
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(m, p.field, p.y0, config));
  }
}
BENCHMARK(BM_IntegrateLogistic)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
