#pragma once

#include "sta_zbw/dynamics.hpp"

namespace sta {

/// Integrated spinor against the matrix-representation analytic evolution.
struct OracleResult {
  int steps_per_period = 0;
  double max_error = 0.0;       ///< at step h, max over all samples
  double max_error_half = 0.0;  ///< at step h/2
  double ratio = 0.0;           ///< max_error / max_error_half
  double bound = 0.0;           ///< error budget at step h
  bool ratio_ok = false;        ///< ratio in [12, 20]
  bool error_ok = false;        ///< max_error <= bound

  bool pass() const { return ratio_ok && error_ok; }
};

/// Max |psi_numeric - psi_analytic| over every sample of a free run.
double oracle_max_error(const SimConfig& cfg);

/// RK4 global error budget 0.05 (m h)^4 per zbw period, scaled by |psi0|.
/// The measured constant is about 0.026.
double oracle_error_bound(const SimConfig& cfg);

/// Runs cfg at h and h/2. With `euler` the integrator is replaced by forward
/// Euler, a negative control whose ratio sits near 2. Throws sta::Error for a
/// non-free config.
OracleResult run_oracle(SimConfig cfg, bool euler = false);

}  // namespace sta
