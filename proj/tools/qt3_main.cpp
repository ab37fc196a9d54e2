// Command-line front end: reproduce the benchmark error tables, run a
// single integration, or print the a priori step-size suggestion.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qt3/bench.hpp"
#include "qt3/driver.hpp"
#include "qt3/problems.hpp"
#include "qt3/riccati.hpp"

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Plain UTF-8 key=value configuration, '#' starts a comment.
std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CLI::ValidationError("--config", "cannot open '" + path + "'");
  }
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = value;
  }
  return kv;
}

int grid_points_from_env() {
  if (const char* env = std::getenv("QT3_GRID_POINTS")) {
    const int n = std::atoi(env);
    if (n >= 2) return n;
  }
  return 2049;
}

qt3::GuardMode parse_guard(const std::string& s) {
  if (s == "runtime") return qt3::GuardMode::Runtime;
  if (s == "apriori") return qt3::GuardMode::Apriori;
  throw CLI::ValidationError("--guard", "expected 'runtime' or 'apriori'");
}

bool parse_window(const std::string& s, double& A, double& B) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return false;
  try {
    A = std::stod(s.substr(0, comma));
    B = std::stod(s.substr(comma + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

int run_bench(const std::map<std::string, std::string>& cfg, CLI::App* cmd,
              std::string problems, std::string methods, std::string steps,
              double tol0, std::string guard, std::string format,
              std::string out_path) {
  qt3::RunSpec spec;
  auto pick = [&](const CLI::Option* opt, const char* key,
                  const std::string& flag_value,
                  const std::string& fallback) -> std::string {
    if (opt->count() > 0) return flag_value;
    const auto it = cfg.find(key);
    if (it != cfg.end()) return it->second;
    return fallback.empty() ? flag_value : fallback;
  };

  problems = pick(cmd->get_option("--problems"), "problems", problems, "");
  methods = pick(cmd->get_option("--methods"), "methods", methods, "");
  steps = pick(cmd->get_option("--steps"), "steps", steps, "");
  guard = pick(cmd->get_option("--guard"), "guard", guard, "");
  format = pick(cmd->get_option("--format"), "format", format, "");
  out_path = pick(cmd->get_option("--out"), "out", out_path, "");
  if (cmd->get_option("--tol0")->count() == 0 && cfg.count("tol0")) {
    tol0 = std::stod(cfg.at("tol0"));
  }

  if (!problems.empty()) spec.problems = split_list(problems);
  if (!methods.empty()) spec.methods = split_list(methods);
  if (!steps.empty()) {
    spec.steps.clear();
    for (const std::string& s : split_list(steps)) {
      spec.steps.push_back(std::stod(s));
    }
  }
  spec.tol0 = tol0;
  spec.guard = parse_guard(guard.empty() ? "runtime" : guard);

  const qt3::BenchReport report = qt3::run_benchmark(spec);
  const std::string text =
      qt3::render_report(report, format.empty() ? "md" : format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 1;
    }
    out << text;
  }
  return report.all_ok() ? 0 : 2;
}

int run_solve(const std::map<std::string, std::string>& cfg, CLI::App* cmd,
              std::string problem_name, std::string method_name, double h,
              double T, std::string window, double tol0, std::string guard,
              std::string out_path) {
  if (cmd->get_option("--problem")->count() == 0 && cfg.count("problem")) {
    problem_name = cfg.at("problem");
  }
  if (cmd->get_option("--method")->count() == 0 && cfg.count("method")) {
    method_name = cfg.at("method");
  }
  if (cmd->get_option("--h")->count() == 0 && cfg.count("h")) {
    h = std::stod(cfg.at("h"));
  }
  if (cmd->get_option("--T")->count() == 0 && cfg.count("T")) {
    T = std::stod(cfg.at("T"));
  }
  if (cmd->get_option("--window")->count() == 0 && cfg.count("window")) {
    window = cfg.at("window");
  }
  if (cmd->get_option("--tol0")->count() == 0 && cfg.count("tol0")) {
    tol0 = std::stod(cfg.at("tol0"));
  }
  if (cmd->get_option("--guard")->count() == 0 && cfg.count("guard")) {
    guard = cfg.at("guard");
  }

  const qt3::Problem& problem = qt3::find_problem(problem_name);
  const qt3::OneStepMethod method = qt3::make_method(method_name);
  qt3::IntegratorConfig config;
  config.tol0 = tol0;
  config.h = h;
  config.T = (T > 0.0) ? T : problem.T;
  config.A = problem.A;
  config.B = problem.B;
  config.guard_mode = parse_guard(guard.empty() ? "runtime" : guard);
  if (!window.empty() && !parse_window(window, config.A, config.B)) {
    throw CLI::ValidationError("--window", "expected 'A,B'");
  }

  const qt3::Trajectory traj =
      qt3::integrate(method, problem.field, problem.y0, config);

  std::ostringstream text;
  const bool with_exact = problem.has_exact();
  text << (with_exact ? "t,y,exact,abs_err" : "t,y") << "\n";
  char buf[128];
  for (std::size_t n = 0; n < traj.t.size(); ++n) {
    if (with_exact) {
      const double ex = problem.exact(traj.t[n]);
      std::snprintf(buf, sizeof(buf), "%g,%.16e,%.16e,%.4e", traj.t[n],
                    traj.y[n], ex, std::abs(ex - traj.y[n]));
    } else {
      std::snprintf(buf, sizeof(buf), "%g,%.16e", traj.t[n], traj.y[n]);
    }
    text << buf << "\n";
  }
  if (out_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 1;
    }
    out << text.str();
  }
  if (traj.status.kind != qt3::TerminationKind::Success) {
    std::cerr << "terminated: " << qt3::to_string(traj.status) << "\n";
    return 2;
  }
  return 0;
}

int run_apriori(const std::map<std::string, std::string>& cfg, CLI::App* cmd,
                std::string problem_name, std::string window, double tol0,
                double T) {
  if (cmd->get_option("--problem")->count() == 0 && cfg.count("problem")) {
    problem_name = cfg.at("problem");
  }
  if (cmd->get_option("--window")->count() == 0 && cfg.count("window")) {
    window = cfg.at("window");
  }
  if (cmd->get_option("--tol0")->count() == 0 && cfg.count("tol0")) {
    tol0 = std::stod(cfg.at("tol0"));
  }
  if (cmd->get_option("--T")->count() == 0 && cfg.count("T")) {
    T = std::stod(cfg.at("T"));
  }

  const qt3::Problem& problem = qt3::find_problem(problem_name);
  double A = problem.A;
  double B = problem.B;
  if (!window.empty() && !parse_window(window, A, B)) {
    throw CLI::ValidationError("--window", "expected 'A,B'");
  }
  const double horizon = (T > 0.0) ? T : problem.T;
  const int grid = grid_points_from_env();

  const double b_max = qt3::scan_max(
      [&problem](double y) { return problem.field.eval(y).d1; }, A, B, grid);
  const double s_max = qt3::scan_max(
      [&problem](double y) {
        const qt3::QuadraticModel m = qt3::quadratic_model(problem.field, y);
        return m.b * m.b + std::abs(m.delta);
      },
      A, B, grid);
  const double h0 = qt3::apriori_h0(problem.field, A, B, tol0, horizon, grid);

  std::printf("problem: %s  window: [%g, %g]  T: %g  tol0: %g\n",
              problem.name.c_str(), A, B, horizon, tol0);
  std::printf("b_max = %.10g\n", b_max);
  std::printf("s_max = %.10g\n", s_max);
  std::printf("h0 = %.10g\n", h0);
  std::printf("Suggest stepsize to be less than %.10g\n", h0);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic-Taylor third-order integrator for autonomous "
               "scalar initial value problems"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "key=value configuration file; flags override file values")
      ->expected(1);

  // bench
  CLI::App* bench = app.add_subcommand(
      "bench", "Run methods x problems x step sizes and report global errors");
  std::string problems, methods, steps, guard = "runtime", format = "md",
              out_path;
  double tol0 = 1e-14;
  bench->add_option("--problems", problems, "comma-separated problem names");
  bench->add_option("--methods", methods, "comma-separated method names");
  bench->add_option("--steps", steps, "comma-separated step sizes");
  bench->add_option("--tol0", tol0, "numerical-zero tolerance");
  bench->add_option("--guard", guard, "runtime | apriori");
  bench->add_option("--format", format, "csv | md");
  bench->add_option("--out", out_path, "output path (default: stdout)");

  // solve
  CLI::App* solve = app.add_subcommand("solve", "Run a single integration");
  std::string s_problem, s_method = "qt3", s_window, s_guard = "runtime",
              s_out;
  double s_h = 0.0, s_T = 0.0, s_tol0 = 1e-14;
  solve->set_help_flag("--help", "print help");  // frees -h for --h
  solve->add_option("--problem", s_problem, "problem name");
  solve->add_option("--method", s_method, "method name");
  solve->add_option("--h", s_h, "step size");
  solve->add_option("--T", s_T, "horizon (default: problem horizon)");
  solve->add_option("--window", s_window, "window as 'A,B'");
  solve->add_option("--tol0", s_tol0, "numerical-zero tolerance");
  solve->add_option("--guard", s_guard, "runtime | apriori");
  solve->add_option("--out", s_out, "output path (default: stdout)");

  // apriori
  CLI::App* apriori = app.add_subcommand(
      "apriori", "Print b_max, s_max, and the a priori step-size bound h0");
  std::string a_problem, a_window;
  double a_tol0 = 1e-14, a_T = 0.0;
  apriori->add_option("--problem", a_problem, "problem name");
  apriori->add_option("--window", a_window, "window as 'A,B'");
  apriori->add_option("--tol0", a_tol0, "numerical-zero tolerance");
  apriori->add_option("--T", a_T, "horizon (default: problem horizon)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::map<std::string, std::string> cfg;
    if (!config_path.empty()) cfg = load_config(config_path);

    if (bench->parsed()) {
      return run_bench(cfg, bench, problems, methods, steps, tol0, guard,
                       format, out_path);
    }
    if (solve->parsed()) {
      if (s_problem.empty() && cfg.count("problem") == 0) {
        std::cerr << "solve: --problem is required\n";
        return 1;
      }
      if (s_h <= 0.0 && cfg.count("h") == 0) {
        std::cerr << "solve: --h is required\n";
        return 1;
      }
      return run_solve(cfg, solve, s_problem, s_method, s_h, s_T, s_window,
                       s_tol0, s_guard, s_out);
    }
    if (apriori->parsed()) {
      if (a_problem.empty() && cfg.count("problem") == 0) {
        std::cerr << "apriori: --problem is required\n";
        return 1;
      }
      return run_apriori(cfg, apriori, a_problem, a_window, a_tol0, a_T);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 1;
}
