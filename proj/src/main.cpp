#include "anomaly/scenario.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

using namespace anomaly;

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("ANOMALY_SEED");
  if (!env || !*env) return fallback;
  return std::strtoull(env, nullptr, 10);
}

void write_report(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

int run_verify(const std::string& suite, const VerifyOptions& opts, const std::string& report_path) {
  std::vector<CriterionResult> results = run_suite(suite, opts);
  Json report = Json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    std::cout << format_result_line(r) << "\n";
    all = all && r.pass;
    Json jr;
    jr["name"] = r.name;
    jr["pass"] = r.pass;
    jr["seconds"] = r.seconds;
    jr["budget_seconds"] = r.budget_seconds;
    for (const auto& [key, value] : r.stats) jr[key] = value;
    if (!r.note.empty()) jr["note"] = r.note;
    report.push_back(jr);
  }
  std::cout << (all ? "all criteria passed" : "CRITERIA FAILED") << "\n";
  if (!report_path.empty()) write_report(report_path, report);
  return all ? 0 : 1;
}

int run_scan(double alpha, const std::vector<int>& sizes, const Tol& tol,
             const std::string& report_path) {
  Json rows = Json::array();
  std::cout << "    n    dim    dim_k    closedness_margin\n";
  for (int n : sizes) {
    CompositionResult comp =
        compose(qalpha_lagrangian(alpha, n, tol), qalpha_lagrangian(-alpha, n, tol), tol);
    std::cout << std::setw(5) << n << "  " << std::setw(5) << 2 * n + 1 << "  " << std::setw(7)
              << comp.k_space.dim() << "    " << std::scientific << std::setprecision(6)
              << comp.closedness_margin << std::defaultfloat << "\n";
    Json row;
    row["n"] = n;
    row["dim"] = 2 * n + 1;
    row["dim_k"] = comp.k_space.dim();
    row["margin"] = comp.closedness_margin;
    rows.push_back(row);
  }
  if (!report_path.empty()) write_report(report_path, rows);
  return 0;
}

int run_glue(const std::string& path, const Tol& tol, const std::string& report_path) {
  ScenarioOutcome out = run_scenario(load_json_file(path), tol);
  std::cout << out.report.dump(2) << "\n";
  std::cout << (out.pass ? "scenario passed" : "SCENARIO FAILED") << "\n";
  if (!report_path.empty()) write_report(report_path, out.report);
  return out.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional gluing engine: batch checks, scans, scenario runs"};
  app.require_subcommand(1);

  VerifyOptions opts;
  std::string suite = "all";
  std::string verify_report;
  CLI::App* verify = app.add_subcommand("verify", "run a named batch of randomized checks");
  verify->add_option("suite", suite, "algebra, gluing, functor, or all")
      ->check(CLI::IsMember({"algebra", "gluing", "functor", "all"}));
  CLI::Option* seed_opt = verify->add_option("--seed", opts.seed, "master seed (default: ANOMALY_SEED or 0)");
  verify->add_option("--cases", opts.cases, "base case count per batch")->check(CLI::PositiveNumber);
  verify->add_option("--dim-max", opts.dim_max, "largest sampled space dimension")
      ->check(CLI::PositiveNumber);
  verify->add_option("--rank-tol", opts.tol.rank_tol, "relative singular value cut");
  verify->add_option("--residual-tol", opts.tol.residual_tol, "absolute residual bound");
  verify->add_option("--report", verify_report, "write criterion results to a JSON file");

  double alpha = 1.0;
  std::vector<int> sizes{4, 8, 16, 32};
  std::string family, scan_report;
  Tol scan_tol;
  CLI::App* scan = app.add_subcommand("scan", "sweep a parameter family");
  scan->add_option("family", family, "family to sweep (qalpha)")->required();
  scan->add_option("--alpha", alpha, "exponent of the weight family");
  scan->add_option("--sizes", sizes, "comma-separated n values")->delimiter(',');
  scan->add_option("--rank-tol", scan_tol.rank_tol, "relative singular value cut");
  scan->add_option("--report", scan_report, "write scan rows to a JSON file");

  std::string scenario_path, glue_report;
  Tol glue_tol;
  CLI::App* glue = app.add_subcommand("glue", "run a scenario described by a JSON file");
  glue->add_option("scenario", scenario_path, "scenario file")->required()->check(CLI::ExistingFile);
  glue->add_option("--rank-tol", glue_tol.rank_tol, "relative singular value cut");
  glue->add_option("--residual-tol", glue_tol.residual_tol, "absolute residual bound");
  glue->add_option("--report", glue_report, "write the scenario report to a JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (seed_opt->count() == 0) opts.seed = seed_from_env(opts.seed);
      return run_verify(suite, opts, verify_report);
    }
    if (scan->parsed()) {
      if (family != "qalpha") {
        std::cerr << "unknown scan family: " << family << "\n";
        return 2;
      }
      if (alpha == 0.0) {
        std::cerr << "alpha must be nonzero\n";
        return 2;
      }
      return run_scan(alpha, sizes, scan_tol, scan_report);
    }
    if (glue->parsed()) return run_glue(scenario_path, glue_tol, glue_report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
