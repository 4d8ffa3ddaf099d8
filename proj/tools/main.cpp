#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "manifest.hpp"
#include "sta_zbw/checks.hpp"
#include "sta_zbw/config.hpp"
#include "sta_zbw/io.hpp"
#include "sta_zbw/oracle.hpp"

namespace fs = std::filesystem;
using namespace sta;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadConfig = 2;
constexpr int kAbort = 3;

int cmd_run(const std::string& path, const std::string& out_dir, std::uint64_t seed, double tol_scale) {
  const auto t0 = std::chrono::steady_clock::now();
  cli::RunManifest man;
  man.version = STA_ZBW_VERSION;
  man.seed = seed;
  man.tol_scale = tol_scale;
  man.started_at = cli::utc_now();
  try {
    man.config = load_config(path);
  } catch (const Error& e) {
    std::fprintf(stderr, "sta-zbw: bad config: %s\n", e.what());
    return kBadConfig;
  }

  std::optional<Trajectory> traj;
  try {
    traj.emplace(integrate(man.config.sim));
  } catch (const NumericalAbort& e) {
    std::fprintf(stderr, "sta-zbw: numerical abort at sample %zu: %s\n", e.sample_index(), e.what());
    return kAbort;
  } catch (const Error& e) {
    std::fprintf(stderr, "sta-zbw: bad config: %s\n", e.what());
    return kBadConfig;
  }
  const std::vector<SampleRow> rows = analyse(*traj);
  man.config_hash = traj->config_hash();
  man.samples = rows.size();
  man.checks = trajectory_checks(*traj, rows, tol_scale);

  fs::create_directories(out_dir);
  if (man.config.write_trajectory) {
    man.trajectory_path = (fs::path(out_dir) / "trajectory.csv").string();
    std::ofstream csv(man.trajectory_path, std::ios::binary);
    write_csv(csv, rows);
    if (!csv) {
      std::fprintf(stderr, "sta-zbw: cannot write %s\n", man.trajectory_path.c_str());
      return kFail;
    }
  }
  for (const CheckResult& c : man.checks) std::printf("%s\n", format_check(c).c_str());

  if (man.config.write_report) {
    man.report_path = (fs::path(out_dir) / "report.json").string();
    man.finished_at = cli::utc_now();
    man.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ofstream rep(man.report_path, std::ios::binary);
    rep << cli::to_json(man).dump(2) << '\n';
    if (!rep) {
      std::fprintf(stderr, "sta-zbw: cannot write %s\n", man.report_path.c_str());
      return kFail;
    }
  }
  std::printf("%zu samples, checks %s\n", rows.size(), all_pass(man.checks) ? "passed" : "FAILED");
  return kOk;
}

int cmd_check(const std::string& suite, std::uint64_t seed, double perturb, double tol_scale) {
  CheckOptions opts;
  opts.seed = seed;
  opts.perturb = perturb;
  opts.tol_scale = tol_scale;
  const std::vector<CheckResult> results = run_suite(suite, opts);
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    std::printf("%s\n", format_check(r).c_str());
    if (r.gated && !r.pass) ++failed;
  }
  std::printf("%zu checks, %zu failed\n", results.size(), failed);
  return failed == 0 ? kOk : kFail;
}

int cmd_oracle(const std::string& path, bool euler, double tol_scale) {
  RunConfig cfg;
  try {
    cfg = load_config(path);
    if (cfg.sim.field.kind != FieldKind::free) throw ConfigError("oracle needs field.kind = free");
  } catch (const Error& e) {
    std::fprintf(stderr, "sta-zbw: bad config: %s\n", e.what());
    return kBadConfig;
  }
  OracleResult r;
  try {
    r = run_oracle(cfg.sim, euler);
  } catch (const NumericalAbort& e) {
    std::fprintf(stderr, "sta-zbw: numerical abort at sample %zu: %s\n", e.sample_index(), e.what());
    return kAbort;
  }
  const double bound = r.bound * tol_scale;
  const bool error_ok = r.max_error <= bound;
  std::printf("integrator        %s\n", euler ? "euler (debug)" : "rk4");
  std::printf("steps/period      %d and %d\n", r.steps_per_period, 2 * r.steps_per_period);
  std::printf("max error (h)     %.3e  bound %.3e  %s\n", r.max_error, bound, error_ok ? "ok" : "EXCEEDED");
  std::printf("max error (h/2)   %.3e\n", r.max_error_half);
  std::printf("ratio             %.4f  expected [12, 20]  %s\n", r.ratio, r.ratio_ok ? "ok" : "OUT OF RANGE");
  return r.ratio_ok && error_ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spacetime-algebra spinning-electron simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", STA_ZBW_VERSION);

  std::string config, out_dir = ".", suite;
  std::uint64_t seed = 42;
  double perturb = 0.0;
  bool euler = false;

  CLI::App* run = app.add_subcommand("run", "Integrate a config, write trajectory.csv and report.json");
  run->add_option("config", config, "Config file")->required();
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run->add_option("--seed", seed, "Seed recorded in the report")->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "Run an invariant suite");
  check->add_option("suite", suite, "algebra|dynamics|geometry|dirac|all")
      ->required()
      ->check(CLI::IsMember({"algebra", "dynamics", "geometry", "dirac", "all"}));
  check->add_option("--seed", seed, "Seed for random inputs")->capture_default_str();
  check->add_option("--perturb", perturb, "Corrupt every check input by this amount (negative control)");

  CLI::App* oracle = app.add_subcommand("oracle", "Compare a free run with the analytic spinor at h and h/2");
  oracle->add_option("config", config, "Config file")->required();
  oracle->add_flag("--euler-debug", euler, "Use forward Euler instead of RK4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadConfig;
  }

  double tol_scale = 1.0;
  try {
    tol_scale = tolerance_scale_from_env();
  } catch (const Error& e) {
    std::fprintf(stderr, "sta-zbw: %s\n", e.what());
    return kBadConfig;
  }

  try {
    if (run->parsed()) return cmd_run(config, out_dir, seed, tol_scale);
    if (check->parsed()) return cmd_check(suite, seed, perturb, tol_scale);
    return cmd_oracle(config, euler, tol_scale);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sta-zbw: %s\n", e.what());
    return kFail;
  }
}
