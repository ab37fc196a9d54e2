#include "qt3/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qt3 {

bool BenchReport::all_ok() const {
  for (const ErrorTable& table : tables) {
    for (const auto& row : table.cells) {
      for (const CellResult& cell : row) {
        if (!cell.ok) return false;
      }
    }
  }
  return true;
}

double global_error(const Trajectory& traj,
                    const std::function<double(double)>& exact) {
  if (traj.status.kind != TerminationKind::Success) {
    throw std::logic_error("global_error requires a Success trajectory, got " +
                           to_string(traj.status));
  }
  double worst = 0.0;
  for (std::size_t n = 0; n < traj.t.size(); ++n) {
    worst = std::max(worst, std::abs(exact(traj.t[n]) - traj.y[n]));
  }
  return worst;
}

std::optional<double> observed_order(double e_coarse, double e_fine,
                                     double tol0) {
  return observed_order(e_coarse, e_fine, 2.0, 1.0, tol0);
}

std::optional<double> observed_order(double e1, double e2, double h1,
                                     double h2, double tol0) {
  if (!(e1 > 10.0 * tol0) || !(e2 > 10.0 * tol0)) {
    return std::nullopt;  // indeterminate: at the noise floor
  }
  return std::log(e1 / e2) / std::log(h1 / h2);
}

BenchReport run_benchmark(const RunSpec& spec) {
  BenchReport report;
  report.spec = spec;

  std::vector<OneStepMethod> methods;
  methods.reserve(spec.methods.size());
  for (const std::string& name : spec.methods) {
    methods.push_back(make_method(name));
  }

  std::vector<double> steps = spec.steps;
  std::sort(steps.begin(), steps.end(), std::greater<>());

  for (const std::string& problem_name : spec.problems) {
    const Problem& problem = find_problem(problem_name);
    ErrorTable table;
    table.problem = problem.name;
    table.hs = steps;
    for (const OneStepMethod& m : methods) table.methods.push_back(m.name);

    const auto start = std::chrono::steady_clock::now();
    for (double h : steps) {
      std::vector<CellResult> row;
      for (const OneStepMethod& method : methods) {
        CellResult cell;
        IntegratorConfig config{spec.tol0, h, problem.T, problem.A, problem.B,
                                spec.guard};
        const Trajectory traj =
            integrate(method, problem.field, problem.y0, config);
        if (traj.status.kind != TerminationKind::Success) {
          cell.failure = to_string(traj.status);
        } else if (!problem.has_exact()) {
          cell.failure = "NoExactSolution";
        } else {
          cell.ok = true;
          cell.raw = global_error(traj, problem.exact);
          cell.clamped = (cell.raw < spec.tol0) ? 0.0 : cell.raw;
        }
        row.push_back(cell);
      }
      table.cells.push_back(std::move(row));
    }
    table.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

    // Orders for the leading pair and, when present, the trailing pair.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (steps.size() >= 2) pairs.emplace_back(0, 1);
    if (steps.size() >= 4) pairs.emplace_back(steps.size() - 2,
                                              steps.size() - 1);
    for (std::size_t col = 0; col < methods.size(); ++col) {
      std::vector<std::optional<double>> method_orders;
      for (const auto& [i, j] : pairs) {
        const CellResult& coarse = table.cells[i][col];
        const CellResult& fine = table.cells[j][col];
        if (coarse.ok && fine.ok) {
          method_orders.push_back(observed_order(coarse.raw, fine.raw,
                                                 steps[i], steps[j],
                                                 spec.tol0));
        } else {
          method_orders.push_back(std::nullopt);
        }
      }
      table.orders[methods[col].name] = std::move(method_orders);
    }

    report.tables.push_back(std::move(table));
  }
  return report;
}

namespace {

std::string format_error(const CellResult& cell) {
  if (!cell.ok) return cell.failure;
  if (cell.clamped == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4e", cell.clamped);
  return buf;
}

std::string format_h(double h) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", h);
  return buf;
}

std::string format_order(const std::optional<double>& order) {
  if (!order) return "indeterminate";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", *order);
  return buf;
}

std::string header_cells(const ErrorTable& table, const char* sep) {
  std::string line = "h";
  for (const std::string& m : table.methods) {
    line += sep;
    line += m;
  }
  return line;
}

std::string guard_name(GuardMode mode) {
  return mode == GuardMode::Runtime ? "runtime" : "apriori";
}

}  // namespace

std::string render_report(const BenchReport& report, std::string_view format) {
  if (report.tables.empty()) {
    throw std::invalid_argument("render_report: empty report");
  }
  std::ostringstream out;
  if (format == "csv") {
    for (const ErrorTable& table : report.tables) {
      out << "# problem: " << table.problem << "\n";
      out << header_cells(table, ",") << "\n";
      for (std::size_t i = 0; i < table.hs.size(); ++i) {
        out << format_h(table.hs[i]);
        for (const CellResult& cell : table.cells[i]) {
          out << "," << format_error(cell);
        }
        out << "\n";
      }
      out << "# observed orders";
      for (const std::string& m : table.methods) {
        out << " " << m << "=";
        const auto& ords = table.orders.at(m);
        for (std::size_t k = 0; k < ords.size(); ++k) {
          out << (k ? "/" : "") << format_order(ords[k]);
        }
      }
      out << "\n";
      char t[32];
      std::snprintf(t, sizeof(t), "%.2f", table.wall_ms);
      out << "# wall_ms: " << t << "\n\n";
    }
    out << "# tol0=" << report.spec.tol0
        << " guard=" << guard_name(report.spec.guard) << "\n";
    out << "# note: runtime and a priori guard modes produce identical "
           "tables when no guard fires\n";
  } else if (format == "md") {
    for (const ErrorTable& table : report.tables) {
      out << "## " << table.problem << "\n\n";
      out << "| " << header_cells(table, " | ") << " |\n";
      out << "| ---";
      for (std::size_t j = 0; j < table.methods.size(); ++j) out << " | ---";
      out << " |\n";
      for (std::size_t i = 0; i < table.hs.size(); ++i) {
        out << "| " << format_h(table.hs[i]);
        for (const CellResult& cell : table.cells[i]) {
          out << " | " << format_error(cell);
        }
        out << " |\n";
      }
      out << "\nObserved orders:";
      for (const std::string& m : table.methods) {
        out << " " << m << "=";
        const auto& ords = table.orders.at(m);
        for (std::size_t k = 0; k < ords.size(); ++k) {
          out << (k ? "/" : "") << format_order(ords[k]);
        }
      }
      char t[32];
      std::snprintf(t, sizeof(t), "%.2f", table.wall_ms);
      out << " (wall " << t << " ms)\n\n";
    }
    out << "tol0=" << report.spec.tol0
        << ", guard=" << guard_name(report.spec.guard)
        << ". Runtime and a priori guard modes produce identical tables "
           "when no guard fires.\n";
  } else {
    throw std::invalid_argument("render_report: unknown format '" +
                                std::string(format) + "'");
  }
  return out.str();
}

}  // namespace qt3
