#pragma once

#include <string>
#include <vector>

#include "sta_zbw/dynamics.hpp"

namespace sta {

/// psi' gamma1 gamma2 + pi psi gamma0, with psi' standing for v.d psi on the stream-line.
Multivector nonlinear_residual(const ParticleState& s, const Derivatives& d,
                               const FieldSpec& f = FieldSpec::free_field());

/// Free form psi' gamma1 gamma2 + m (psi^-1 v ~psi^-1) psi gamma0. Since
/// psi^-1 v ~psi^-1 = gamma0 identically, this vanishes on solutions only in
/// the frame where p = m gamma0. Throws DegenerateError for light-like psi.
Multivector free_nonlinear_residual(const ParticleState& s, const Derivatives& d, double m);

/// Dirac-Hestenes form d psi gamma1 gamma2 + m psi gamma0 on a stream-line,
/// with the gradient rebuilt from psi' as d psi = v^-1 psi' (psi assumed to vary
/// along v only).
Multivector streamline_dh_residual(const ParticleState& s, const Derivatives& d, double m);

/// Averaged form ((p/m).d psi) gamma1 gamma2 + p psi gamma0: v replaced by its
/// zbw mean p/m, gradient rebuilt as in streamline_dh_residual.
Multivector linearized_residual(const ParticleState& s, const Derivatives& d, double m);

/// psi(x) = psi0 exp(sign gamma2 gamma1 m gamma0.x); the physical branch is sign = -1.
EvenElement plane_wave(const EvenElement& psi0, double m, const Multivector& x, double sign = -1.0);

/// d psi gamma1 gamma2 + m psi gamma0 for the plane wave above, with the exact
/// spacetime gradient gamma^0 d_0 psi.
Multivector dh_residual_planewave(const EvenElement& psi0, double m, const Multivector& x, double sign = -1.0);

/// Stream-line point of the rest-frame plane wave: psi from plane_wave, p = m gamma0.
ParticleState plane_wave_state(const EvenElement& psi0, double m, const Multivector& x);

/// v.d psi, v and p' = 0 for that plane wave, from its exact gradient.
Derivatives plane_wave_derivatives(const EvenElement& psi0, double m, const Multivector& x);

enum class ResidualKind { nl12, nl15, dh16, lin15p };

std::string to_string(ResidualKind k);

struct ResidualReport {
  ResidualKind kind = ResidualKind::nl12;
  std::vector<double> norms;  ///< per sample, coefficient 2-norm
  double max = 0.0;
  double rms = 0.0;
};

ResidualReport make_report(ResidualKind kind, std::vector<double> norms);

struct LinearizationReport {
  ResidualReport nonlinear;   ///< nl15, before v -> <v>
  ResidualReport linearized;  ///< lin15p, after v -> <v> = p/m
  ResidualReport dirac;       ///< dh16 on the stream-line
  double mean_velocity_error = 0.0;  ///< max component of <v> - p/m
};

/// Residuals along a free trajectory, before and after replacing v by its zbw
/// mean. Throws sta::Error if the trajectory is not free or spans less than one
/// zbw period.
LinearizationReport linearization_check(const Trajectory& t);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sta
