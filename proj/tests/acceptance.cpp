// Acceptance gate for the qt3 library. Runs each criterion end to end,
// prints one PASS/FAIL line per criterion, and exits nonzero if any fail.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qt3/bench.hpp"
#include "qt3/driver.hpp"
#include "qt3/problems.hpp"
#include "qt3/riccati.hpp"
#include "qt3/special.hpp"
#include "qt3/steppers.hpp"

using namespace qt3;

namespace {

constexpr double kTol0 = 1e-14;

bool close_rel(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::abs(want);
}

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

// Reference global-error tables, rows h = 0.1, 0.05, 0.02, 0.01 and
// columns K3, BS3, RK4, QT3. Zeros mark cells clamped below tol0.
struct Reference {
  const char* problem;
  double cells[4][4];
};

const Reference kReference[] = {
    {"logistic",
     {{9.0574e-02, 4.9747e-02, 1.3532e-02, 0},
      {1.3495e-02, 8.2625e-03, 1.0941e-03, 0},
      {9.6842e-04, 6.3000e-04, 3.3012e-05, 0},
      {1.2579e-04, 8.3520e-05, 2.1834e-06, 0}}},
    {"bernoulli_small",
     {{2.8543e-06, 2.8543e-06, 5.6900e-08, 9.6127e-13},
      {3.7135e-07, 3.7135e-07, 3.7073e-09, 1.2390e-13},
      {2.4343e-08, 2.4343e-08, 9.7307e-11, 0},
      {3.0673e-09, 3.0673e-09, 6.1326e-12, 0}}},
    {"bernoulli_one",
     {{6.3817e-04, 4.5295e-04, 1.5055e-05, 3.2525e-04},
      {8.1554e-05, 5.8683e-05, 9.2633e-07, 4.1018e-05},
      {5.2845e-06, 3.8374e-06, 2.3554e-08, 2.6396e-06},
      {6.6341e-07, 4.8314e-07, 1.4695e-09, 3.3052e-07}}},
    {"gompertz",
     {{1.5931e-05, 1.5604e-05, 3.1690e-07, 9.7263e-09},
      {1.9169e-06, 1.8770e-06, 1.9019e-08, 1.1837e-09},
      {1.1990e-07, 1.1734e-07, 4.7509e-10, 7.4419e-11},
      {1.4873e-08, 1.4554e-08, 2.9431e-11, 9.2619e-12}}},
    {"flame",
     {{3.0134e-07, 2.8743e-07, 5.9219e-09, 3.8462e-10},
      {3.6318e-08, 3.4589e-08, 3.5555e-10, 4.6768e-11},
      {2.2745e-09, 2.1638e-09, 8.8861e-12, 2.9453e-12},
      {2.8224e-10, 2.6843e-10, 5.5067e-13, 3.6637e-13}}},
    {"sine",
     {{1.0453e-06, 1.0450e-06, 2.0837e-08, 3.4029e-10},
      {1.3599e-07, 1.3594e-07, 1.3576e-09, 4.3857e-11},
      {8.9142e-09, 8.9111e-09, 3.5634e-11, 2.8583e-12},
      {1.1232e-09, 1.1228e-09, 2.2457e-12, 3.5945e-13}}}};

int failures = 0;

void report(int id, const char* label, bool ok, const std::string& detail) {
  if (ok) {
    std::printf("[PASS] %d %s\n", id, label);
  } else {
    ++failures;
    std::printf("[FAIL] %d %s: %s\n", id, label, detail.c_str());
  }
}

// 1. The default benchmark reproduces the reference error tables: every
//    nonzero cell within 5e-3 relative, QT3 on logistic below tol0 raw,
//    the whole run under 10 seconds.
void criterion_tables(const BenchReport& bench, double bench_ms) {
  std::string detail;
  if (bench_ms >= 10000.0) {
    detail = "benchmark took " + std::to_string(bench_ms) + " ms";
  }
  for (const Reference& ref : kReference) {
    const ErrorTable* table = nullptr;
    for (const ErrorTable& t : bench.tables) {
      if (t.problem == ref.problem) table = &t;
    }
    if (table == nullptr) {
      detail += std::string(" missing table ") + ref.problem;
      continue;
    }
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        const CellResult& cell = table->cells[row][col];
        const double want = ref.cells[row][col];
        char buf[160];
        if (!cell.ok) {
          std::snprintf(buf, sizeof buf, " %s h=%g %s failed", ref.problem,
                        table->hs[row], table->methods[col].c_str());
          detail += buf;
        } else if (want == 0.0) {
          if (cell.raw >= kTol0) {
            std::snprintf(buf, sizeof buf, " %s h=%g %s raw=%.3e not clamped",
                          ref.problem, table->hs[row],
                          table->methods[col].c_str(), cell.raw);
            detail += buf;
          }
        } else if (!close_rel(cell.clamped, want, 5e-3)) {
          std::snprintf(buf, sizeof buf, " %s h=%g %s got %.4e want %.4e",
                        ref.problem, table->hs[row],
                        table->methods[col].c_str(), cell.clamped, want);
          detail += buf;
        }
      }
    }
  }
  report(1, "reference error tables reproduced", detail.empty(), detail);
}

// 2. The step solves random quadratic models exactly (against the
//    independently derived closed form), 10000 models in under a second.
void criterion_exactness() {
  std::mt19937_64 rng(20240901);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const double t0 = now_ms();
  std::string detail;
  for (int i = 0; i < 10000; ++i) {
    const QuadraticModel m = make_model(dist(rng), dist(rng), dist(rng));
    const double h = 0.9 * std::min(h_max(m), 1.0);
    if (h == 0.0) continue;
    const double w = riccati_exact(m, h);
    const double step = qt3_step(m, 0.0, h, kTol0);
    if (std::abs(step - w) > 1e-10 * (1.0 + std::abs(w))) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "model (%g,%g,%g) h=%g step %.15e vs exact %.15e", m.a,
                    m.b, m.c, h, step, w);
      detail = buf;
      break;
    }
  }
  const double elapsed = now_ms() - t0;
  if (detail.empty() && elapsed >= 1000.0) {
    detail = "took " + std::to_string(elapsed) + " ms";
  }
  report(2, "exact on 10000 random quadratic models", detail.empty(), detail);
}

// 3. Blow-up guard on the demo problem: h = 0.1 exceeds the per-step
//    blow-up time ln(100)/99 at the initial state and is refused at step 0,
//    while h = 0.01 proceeds through at least the first four steps.
void criterion_guard() {
  const Problem& p = find_problem("blowup_demo");
  const OneStepMethod qt3m = make_method("qt3");
  std::string detail;

  const double hmax0 = h_max(quadratic_model(p.field, p.y0));
  const double want = std::log(100.0) / 99.0;
  if (!close_rel(hmax0, want, 1e-9)) {
    detail += "h_max(y0) = " + std::to_string(hmax0);
  }

  const IntegratorConfig coarse{kTol0, 0.1, p.T, p.A, p.B, GuardMode::Runtime};
  const Trajectory refused = integrate(qt3m, p.field, p.y0, coarse);
  if (refused.status.kind != TerminationKind::StepSizeUndefined ||
      refused.status.at_step != 0) {
    detail += " h=0.1 not refused at step 0 (" +
              to_string(refused.status) + ")";
  }

  const IntegratorConfig fine{kTol0, 0.01, p.T, p.A, p.B, GuardMode::Runtime};
  const Trajectory ok = integrate(qt3m, p.field, p.y0, fine);
  if (ok.steps_completed < 4) {
    detail += " h=0.01 stopped after " + std::to_string(ok.steps_completed) +
              " steps (" + to_string(ok.status) + ")";
  }
  report(3, "blow-up aware step refusal", detail.empty(), detail);
}

// 4. The a priori threshold is sound across every problem window, and the
//    closed-form thresholds for the logistic and exponential fields come
//    out right to six significant digits.
void criterion_apriori() {
  std::string detail;
  for (const Problem& p : builtin_problems()) {
    const double h0 = apriori_h0(p.field, p.A, p.B, kTol0, p.T);
    const double h = 0.99 * h0;
    for (int i = 0; i < 100; ++i) {
      const double y = p.A + (p.B - p.A) * i / 99.0;
      if (!classify_branch(quadratic_model(p.field, y), h, kTol0).defined()) {
        char buf[120];
        std::snprintf(buf, sizeof buf, " %s undefined at y=%.6f h=%.6f",
                      p.name.c_str(), y, h);
        detail += buf;
        break;
      }
    }
  }

  const Problem& logistic = find_problem("logistic");
  const double h_log = apriori_h0(logistic.field, 0.0, 10.0, kTol0, 2.0);
  if (!close_rel(h_log, 2.0 / std::sqrt(200.0), 1e-6)) {
    detail += " logistic h0 = " + std::to_string(h_log);
  }

  const ScalarField expf{"exp", [](const Jet2& y) { return exp(y); }};
  const double h_exp = apriori_h0(expf, 0.0, 2.0, kTol0, 2.0);
  if (!close_rel(h_exp, 2.0 / std::sqrt(2.0 * std::exp(4.0)), 1e-6)) {
    detail += " exp h0 = " + std::to_string(h_exp);
  }
  report(4, "a priori step-size threshold sound", detail.empty(), detail);
}

// 5. Observed convergence orders on the Gompertz problem match the nominal
//    orders 1, 2, 3, 3, 4, 3 to within 0.35.
void criterion_orders() {
  const Problem& p = find_problem("gompertz");
  const struct {
    const char* method;
    double nominal;
  } cases[] = {{"euler", 1.0}, {"re", 2.0},  {"k3", 3.0},
               {"bs3", 3.0},   {"rk4", 4.0}, {"qt3", 3.0}};
  std::string detail;
  for (const auto& c : cases) {
    const OneStepMethod m = make_method(c.method);
    double errs[2];
    for (int k = 0; k < 2; ++k) {
      const double h = k == 0 ? 0.1 : 0.05;
      const IntegratorConfig config{kTol0, h, p.T, p.A, p.B,
                                    GuardMode::Runtime};
      errs[k] = global_error(integrate(m, p.field, p.y0, config), p.exact);
    }
    const auto order = observed_order(errs[0], errs[1]);
    if (!order || std::abs(*order - c.nominal) > 0.35) {
      char buf[120];
      std::snprintf(buf, sizeof buf, " %s order %.3f vs nominal %.1f",
                    c.method, order.value_or(-1.0), c.nominal);
      detail += buf;
    }
  }
  report(5, "observed orders match nominal orders", detail.empty(), detail);
}

// 6. The near-degenerate expansion and the exact branches agree to 1e-9
//    relative across the dispatch seam |delta| = 4 tol0.
void criterion_seam() {
  const double b = 1.0;
  const double c = 1.0;
  const double h = 0.5;
  std::string detail;
  for (int i = -32; i <= 32; ++i) {
    const double delta = i / 4.0 * kTol0;
    const QuadraticModel m{(b * b - delta) / 4.0, b, c, delta};
    const double d = 2.0 - b * h;
    const double u0 =
        2.0 * c * h / d - h * h * h * c * delta / (3.0 * d * d);
    const double step = qt3_step(m, 0.0, h, kTol0);
    if (!close_rel(step, u0, 1e-9)) {
      char buf[120];
      std::snprintf(buf, sizeof buf, "delta=%.3e step %.15e vs %.15e", delta,
                    step, u0);
      detail = buf;
      break;
    }
  }
  report(6, "branch seam continuity", detail.empty(), detail);
}

// 7. Special functions hit their closed-form fixed points to 1e-15.
void criterion_special() {
  std::string detail;
  const struct {
    double got, want;
  } checks[] = {{lambert_w0(0.0), 0.0},
                {lambert_w0(std::exp(1.0)), 1.0},
                {lambert_w0(1.0), 0.5671432904097838},
                {arccot_real(0.0), M_PI / 2.0},
                {arccot_real(1.0), M_PI / 4.0},
                {arccot_real(-1.0), 3.0 * M_PI / 4.0}};
  for (const auto& c : checks) {
    if (std::abs(c.got - c.want) > 1e-15 * (1.0 + std::abs(c.want))) {
      char buf[120];
      std::snprintf(buf, sizeof buf, " got %.17g want %.17g", c.got, c.want);
      detail += buf;
    }
  }
  report(7, "special function fixed points", detail.empty(), detail);
}

// 8. Jet-propagated derivatives match the hand-written triples to 1e-10
//    relative at 1000 window states per field.
void criterion_jets() {
  std::mt19937_64 rng(20240902);
  std::string detail;
  for (const Problem& p : builtin_problems()) {
    std::uniform_real_distribution<double> dist(p.A, p.B);
    for (int i = 0; i < 1000 && detail.empty(); ++i) {
      const double y = dist(rng);
      const Jet2 j = p.field.eval(y);
      const auto hand = p.field.hand_triple(y);
      const double vals[3] = {j.v, j.d1, j.d2};
      for (int k = 0; k < 3; ++k) {
        if (std::abs(vals[k] - hand[k]) >
            1e-10 * (1.0 + std::abs(hand[k]))) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "%s y=%.12g d%d %.15e vs %.15e",
                        p.name.c_str(), y, k, vals[k], hand[k]);
          detail = buf;
        }
      }
    }
  }
  report(8, "jets match hand-written derivatives", detail.empty(), detail);
}

// 9. On the problems where QT3 runs clean, its error beats the best
//    third-order baseline by at least a factor of ten at every step size.
void criterion_comparative(const BenchReport& bench) {
  const char* targets[] = {"logistic", "bernoulli_small", "gompertz", "sine"};
  std::string detail;
  for (const char* name : targets) {
    const ErrorTable* table = nullptr;
    for (const ErrorTable& t : bench.tables) {
      if (t.problem == name) table = &t;
    }
    if (table == nullptr) {
      detail += std::string(" missing table ") + name;
      continue;
    }
    std::size_t k3 = 0, bs3 = 0, qt3 = 0;
    for (std::size_t j = 0; j < table->methods.size(); ++j) {
      if (table->methods[j] == "K3") k3 = j;
      if (table->methods[j] == "BS3") bs3 = j;
      if (table->methods[j] == "QT3") qt3 = j;
    }
    for (std::size_t row = 0; row < table->hs.size(); ++row) {
      const double baseline = std::min(table->cells[row][k3].raw,
                                       table->cells[row][bs3].raw);
      const double ours = table->cells[row][qt3].raw;
      if (ours > 0.1 * baseline) {
        char buf[120];
        std::snprintf(buf, sizeof buf, " %s h=%g qt3 %.3e vs baseline %.3e",
                      name, table->hs[row], ours, baseline);
        detail += buf;
      }
    }
  }
  report(9, "an order of magnitude under the third-order baselines",
         detail.empty(), detail);
}

}  // namespace

int main() {
  const double t0 = now_ms();
  const BenchReport bench = run_benchmark(RunSpec{});
  const double bench_ms = now_ms() - t0;

  criterion_tables(bench, bench_ms);
  criterion_exactness();
  criterion_guard();
  criterion_apriori();
  criterion_orders();
  criterion_seam();
  criterion_special();
  criterion_jets();
  criterion_comparative(bench);

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failures);
  return 1;
}
