#include "sta_zbw/oracle.hpp"

#include <cmath>
#include <limits>

namespace sta {

double oracle_max_error(const SimConfig& cfg) {
  if (cfg.field.kind != FieldKind::free) throw Error("oracle: free-field config required");
  const Trajectory t = integrate(cfg);
  const ParticleState s0 = initial_state(cfg);
  double err = 0.0;
  for (const auto& smp : t.samples()) {
    const EvenElement exact = bz_analytic_spinor(s0.psi, cfg.p0, cfg.mass, smp.state.tau);
    err = std::fmax(err, (smp.state.psi - exact).mv().max_abs());
  }
  return err;
}

double oracle_error_bound(const SimConfig& cfg) {
  const double mh = cfg.mass * cfg.step();
  const double size = std::fmax(1.0, initial_state(cfg).psi.mv().max_abs());
  return 0.05 * std::pow(mh, 4) * std::fmax(1.0, std::ceil(cfg.periods)) * size;
}

OracleResult run_oracle(SimConfig cfg, bool euler) {
  if (cfg.field.kind != FieldKind::free) throw Error("oracle: free-field config required");
  cfg.integrator = euler ? Integrator::euler : Integrator::rk4;
  SimConfig half = cfg;
  half.steps_per_period *= 2;

  OracleResult r;
  r.steps_per_period = cfg.steps_per_period;
  r.max_error = oracle_max_error(cfg);
  r.max_error_half = oracle_max_error(half);
  r.ratio = r.max_error_half > 0.0 ? r.max_error / r.max_error_half : std::numeric_limits<double>::infinity();
  r.bound = oracle_error_bound(cfg);
  r.ratio_ok = r.ratio >= 12.0 && r.ratio <= 20.0;
  r.error_ok = r.max_error <= r.bound;
  return r;
}

}  // namespace sta
