#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sta_zbw/io.hpp"

namespace sta {

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  /// Pass iff lo <= measured <= tol. Lower bounds are not scaled.
  double lo = -std::numeric_limits<double>::infinity();
  double tol = 0.0;
  bool pass = false;
  /// Informational rows are printed but never fail a suite.
  bool gated = true;
};

struct CheckOptions {
  std::uint64_t seed = 42;
  /// Multiplies every tolerance; >= 1.
  double tol_scale = 1.0;
  /// Fault injection: size of a deliberate corruption applied to the inputs
  /// of each check. 0 runs the clean suite.
  double perturb = 0.0;
};

/// STA_ZBW_TOL_SCALE, default 1. Throws sta::Error unless it parses as a
/// finite number >= 1.
double tolerance_scale_from_env();

/// Suites: algebra, dynamics, geometry, dirac, all. Throws sta::Error for an
/// unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& opts = {});

/// Invariant checks on one integrated run (suite "run"). Free runs gate energy,
/// momentum, angular momentum, the spinor equation, zbw frequency and mean
/// velocity where the span allows; runs in a field gate the spinor equation
/// and report the rest as INFO.
std::vector<CheckResult> trajectory_checks(const Trajectory& t, const std::vector<SampleRow>& rows,
                                           double tol_scale = 1.0);

bool all_pass(const std::vector<CheckResult>& results);

/// "PASS dynamics/H drift  measured=... tol=..." (or FAIL / INFO).
std::string format_check(const CheckResult& r);

}  // namespace sta
