#include "cli.hpp"

#include "divlab/checks.hpp"
#include "divlab/divergence.hpp"
#include "divlab/errors.hpp"
#include "divlab/extended_real.hpp"
#include "divlab/renyi.hpp"
#include "divlab/report.hpp"
#include "divlab/suites.hpp"
#include "divlab/variational.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace divlab::cli {

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct ComputeArgs {
  std::string f;
  std::string rho;
  std::string sigma;
  std::string method = "spectral";
  int nmax = 1 << 14;
};

struct SweepArgs {
  std::string rho;
  std::string sigma;
  double alpha_min = 0.0;
  double alpha_max = 2.0;
  int steps = 9;
  bool sandwiched = false;
  std::string out;
};

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int trials = 50;
  int dim = 3;
  int nmax = 1 << 14;
  std::string out;
};

struct ReportArgs {
  std::string path;
  bool json = false;
};

void emit_json(const nlohmann::json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const ConvexFunctionSpec f = catalog_from_string(a.f);
  const PositiveFunctional rho = read_state_file(a.rho);
  const PositiveFunctional sigma = read_state_file(a.sigma);

  RunReport r;
  r.command = "compute";
  r.inputs = {{"f", a.f}, {"rho", a.rho}, {"sigma", a.sigma}, {"method", a.method}};
  double spectral = 0.0;
  double variational = 0.0;
  if (a.method == "spectral" || a.method == "both") {
    spectral = standard_f_divergence(f, rho, sigma);
    r.results.push_back({"spectral", spectral});
  }
  if (a.method == "variational" || a.method == "both") {
    VariationalOptions vo;
    vo.n_max = a.nmax;
    r.inputs["nmax"] = a.nmax;
    const VariationalResult v = variational_Sf(f, rho, sigma, vo);
    variational = v.value;
    r.results.push_back({"variational", variational});
    r.results.push_back({"variational_V_at_nmax", v.report.values.back()});
  }
  if (a.method == "both") r.results.push_back({"agreement_gap", checks::abs_gap(spectral, variational)});
  r.wall_time = seconds_since(start);
  emit_json(report_to_json(r), out);
  return kPass;
}

std::vector<double> sweep_grid(const SweepArgs& a) {
  if (a.steps < 1) throw Error(ErrorKind::InvalidInput, "--steps must be positive");
  if (!(a.alpha_min >= 0.0) || !(a.alpha_max >= a.alpha_min)) {
    throw Error(ErrorKind::InvalidInput, "need 0 <= alpha-min <= alpha-max");
  }
  std::vector<double> grid;
  if (a.steps == 1) {
    grid.push_back(a.alpha_min);
  } else {
    const double h = (a.alpha_max - a.alpha_min) / (a.steps - 1);
    for (int k = 0; k < a.steps; ++k) grid.push_back(k + 1 == a.steps ? a.alpha_max : a.alpha_min + h * k);
  }
  // Snap grid points that are 1 up to roundoff, then make sure the exact
  // alpha = 1 row is present whenever 1 lies in the range.
  bool has_one = false;
  for (double& x : grid) {
    if (std::abs(x - 1.0) < 1e-12) {
      x = 1.0;
      has_one = true;
    }
  }
  if (!has_one && a.alpha_min <= 1.0 && 1.0 <= a.alpha_max) grid.push_back(1.0);
  return grid;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const PositiveFunctional rho = read_state_file(a.rho);
  const PositiveFunctional sigma = read_state_file(a.sigma);
  const AlphaSweep sweep = alpha_sweep(rho, sigma, sweep_grid(a), a.sandwiched);

  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  csv << "alpha,Q,D" << (a.sandwiched ? ",D_sandwiched" : "") << '\n';
  bool sandwich_ok = true;
  for (const auto& row : sweep.rows) {
    csv << format_extended(row.alpha, 12) << ',' << format_extended(row.q_value, 12) << ','
        << format_extended(row.d_value, 12);
    if (a.sandwiched) {
      csv << ',';
      if (row.sandwiched) {
        csv << format_extended(*row.sandwiched, 12);
        if (checks::le_violation(*row.sandwiched, row.d_value) > 1e-9) sandwich_ok = false;
      }
    }
    csv << '\n';
  }
  const bool ok = sweep.monotone && sandwich_ok;
  if (a.out.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(a.out);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + a.out);
    file << csv.str();
    RunReport r;
    r.command = "sweep";
    r.inputs = {{"rho", a.rho},           {"sigma", a.sigma}, {"alpha_min", a.alpha_min},
                {"alpha_max", a.alpha_max}, {"steps", a.steps}, {"sandwiched", a.sandwiched},
                {"out", a.out}};
    for (const auto& row : sweep.rows) r.results.push_back({"D_" + format_extended(row.alpha, 12), row.d_value});
    r.suite_outcomes.push_back({"sweep", "D_alpha nondecreasing in alpha", static_cast<int>(sweep.rows.size()),
                                sweep.monotone ? 0.0 : kInf, 1e-9, sweep.monotone});
    if (a.sandwiched) {
      r.suite_outcomes.push_back({"sweep", "sandwiched D_alpha <= D_alpha", static_cast<int>(sweep.rows.size()),
                                  sandwich_ok ? 0.0 : kInf, 1e-9, sandwich_ok});
    }
    r.wall_time = seconds_since(start);
    emit_json(report_to_json(r), out);
  }
  return ok ? kPass : kViolation;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  SuiteOptions o;
  o.seed = a.seed;
  if (const char* env = std::getenv("DIVLAB_SEED"); env != nullptr && *env != '\0') {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, std::string("DIVLAB_SEED is not an integer: ") + env);
    }
  }
  if (a.trials < 1) throw Error(ErrorKind::InvalidInput, "--trials must be positive");
  if (a.dim < 1) throw Error(ErrorKind::InvalidInput, "--dim must be positive");
  o.trials = a.trials;
  o.dim = a.dim;
  o.n_max = a.nmax;

  RunReport r;
  r.command = "verify";
  r.seed = o.seed;
  r.inputs = {{"suite", a.suite}, {"trials", a.trials}, {"dim", a.dim}, {"nmax", a.nmax}};
  r.suite_outcomes = run_suites(a.suite, o);
  r.wall_time = seconds_since(start);
  const nlohmann::json j = report_to_json(r);
  if (!a.out.empty()) {
    std::ofstream file(a.out);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + a.out);
    file << j.dump(2) << '\n';
  }
  emit_json(j, out);
  return r.all_passed() ? kPass : kViolation;
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
  std::ifstream in(a.path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + a.path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, a.path + ": " + e.what());
  }
  const RunReport r = report_from_json(j);
  if (a.json) {
    emit_json(report_to_json(r), out);
    return r.all_passed() ? kPass : kViolation;
  }
  out << "command: " << r.command << "  seed: " << r.seed << "  wall time: " << std::fixed << std::setprecision(2)
      << r.wall_time << " s\n";
  out.unsetf(std::ios::floatfield);
  for (const auto& v : r.results) out << "  " << v.label << " = " << format_extended(v.value, 12) << '\n';
  int failed = 0;
  for (const auto& o : r.suite_outcomes) {
    out << "  [" << (o.passed ? "pass" : "FAIL") << "] " << o.suite << ": " << o.property << "  (trials "
        << o.trials << ", max violation " << format_extended(o.max_violation, 3) << ", tolerance "
        << format_extended(o.tolerance, 3) << ")\n";
    if (!o.passed) ++failed;
  }
  if (!r.suite_outcomes.empty()) {
    out << (failed == 0 ? "all properties passed" : std::to_string(failed) + " properties failed") << '\n';
  }
  return failed == 0 ? kPass : kViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"divlab: quantum f-divergences, Renyi divergences and their invariants"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Evaluate S_f(rho||sigma)");
  compute->add_option("--f", ca.f, "neg_log, t_log_t, power:<alpha>, square_dev, square_dev_over_t, hellinger")
      ->required();
  compute->add_option("--rho", ca.rho, "state file for rho")->required();
  compute->add_option("--sigma", ca.sigma, "state file for sigma")->required();
  compute->add_option("--method", ca.method, "spectral, variational or both")
      ->check(CLI::IsMember({"spectral", "variational", "both"}));
  compute->add_option("--nmax", ca.nmax, "largest truncation level for the variational method")
      ->check(CLI::PositiveNumber);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Tabulate Q_alpha and D_alpha over a grid of alpha");
  sweep->add_option("--rho", sa.rho)->required();
  sweep->add_option("--sigma", sa.sigma)->required();
  sweep->add_option("--alpha-min", sa.alpha_min);
  sweep->add_option("--alpha-max", sa.alpha_max);
  sweep->add_option("--steps", sa.steps, "number of grid points");
  sweep->add_flag("--sandwiched", sa.sandwiched, "add the sandwiched divergence for alpha > 1");
  sweep->add_option("--out", sa.out, "write the CSV here and print a JSON report instead");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run seeded property suites");
  verify->add_option("--suite", va.suite, "suite name or all");
  verify->add_option("--seed", va.seed, "master seed (DIVLAB_SEED overrides)");
  verify->add_option("--trials", va.trials);
  verify->add_option("--dim", va.dim);
  verify->add_option("--nmax", va.nmax, "truncation cap for variational-agreement")->check(CLI::PositiveNumber);
  verify->add_option("--out", va.out, "also write the JSON report to this file");

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "Summarize a JSON report written by another command");
  report->add_option("file", ra.path)->required();
  report->add_flag("--json", ra.json, "re-emit the parsed report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*compute) return cmd_compute(ca, out);
    if (*sweep) return cmd_sweep(sa, out);
    if (*verify) return cmd_verify(va, out);
    if (*report) return cmd_report(ra, out);
  } catch (const Error& e) {
    err << "divlab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "divlab: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace divlab::cli
