#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qt3/driver.hpp"
#include "qt3/problems.hpp"

namespace qt3 {

/// One benchmark cell: the raw global error, the value after zero-clamping
/// (raw < tol0 recorded as 0), or a termination failure string.
struct CellResult {
  double raw = 0.0;
  double clamped = 0.0;
  bool ok = false;
  std::string failure;  // set when !ok, e.g. "StepSizeUndefined(0)"
};

struct ErrorTable {
  std::string problem;
  std::vector<double> hs;            // sorted by decreasing h
  std::vector<std::string> methods;  // column order
  std::vector<std::vector<CellResult>> cells;  // cells[row][col]
  // Observed orders per method for the (h0, h1) and (h_{n-2}, h_{n-1})
  // row pairs; nullopt when either error sits at the noise floor.
  std::map<std::string, std::vector<std::optional<double>>> orders;
  double wall_ms = 0.0;
};

struct RunSpec {
  std::vector<std::string> problems = {"logistic", "bernoulli_small",
                                       "bernoulli_one", "gompertz", "flame",
                                       "sine"};
  std::vector<std::string> methods = {"K3", "BS3", "RK4", "QT3"};
  std::vector<double> steps = {0.1, 0.05, 0.02, 0.01};
  double tol0 = 1e-14;
  GuardMode guard = GuardMode::Runtime;
};

struct BenchReport {
  RunSpec spec;
  std::vector<ErrorTable> tables;

  bool all_ok() const;
};

/// max_n |exact(n h) - y_n| over the trajectory grid.
/// Throws std::logic_error on a non-Success trajectory.
double global_error(const Trajectory& traj,
                    const std::function<double(double)>& exact);

/// log2(e_coarse / e_fine) for a step-size halving; nullopt when either
/// error is at or below the 10 tol0 noise floor.
std::optional<double> observed_order(double e_coarse, double e_fine,
                                     double tol0 = 1e-14);

/// log(e1/e2) / log(h1/h2) for a general step-size pair; same noise-floor
/// flagging as the halving form.
std::optional<double> observed_order(double e1, double e2, double h1,
                                     double h2, double tol0);

BenchReport run_benchmark(const RunSpec& spec);

/// Renders the report as "csv" or "md". Throws std::invalid_argument on an
/// unknown format or an empty report.
std::string render_report(const BenchReport& report, std::string_view format);

}  // namespace qt3
