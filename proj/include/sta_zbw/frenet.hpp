#pragma once

#include <array>

#include "sta_zbw/dynamics.hpp"

namespace sta {

using VectorSet = std::array<Multivector, 4>;

/// Orthonormal frame e_0..e_3 with e_0^2 = +1 and e_j^2 = -1.
struct Tetrad {
  VectorSet e;

  const Multivector& operator[](std::size_t i) const { return e[i]; }
  /// Reciprocal vector e^mu = eta^{mu mu} e_mu.
  Multivector up(std::size_t mu) const;
  /// max |e_mu . e_nu - eta_{mu nu}|.
  double orthonormality_error() const;
};

/// e_mu = R gamma_mu ~R for the rotor part of psi. Throws DegenerateError.
Tetrad rotor_tetrad(const EvenElement& psi);

/// psi gamma_mu ~psi (= rho e_mu when beta = 0).
VectorSet density_tetrad(const EvenElement& psi);

/// dR/dtau from psi' with the density and duality angle derivatives removed:
/// R = exp(-beta gamma5 / 2) psi / sqrt(rho).
EvenElement rotor_derivative(const ParticleState& s, const FieldSpec& f);

/// 2 R' ~R; the bivector part only. `residue`, if given, receives the norm of
/// the other grades.
Multivector rotor_omega(const ParticleState& s, const FieldSpec& f, double* residue = nullptr);

/// d e_mu / dtau for the rotor tetrad: R' gamma_mu ~R + R gamma_mu ~R'.
VectorSet tetrad_derivative(const ParticleState& s, const FieldSpec& f);

/// Omega = (1/2) sum_mu e'_mu ^ e^mu.
Multivector darboux_bivector(const VectorSet& tetrad_dot, const Tetrad& tetrad);

/// max_mu |e'_mu - Omega . e_mu| (coefficient max norm).
double darboux_residual(const VectorSet& tetrad_dot, const Tetrad& tetrad, const Multivector& omega);

/// (m / 2e) e'_mu ^ e^mu. Throws sta::Error for e = 0.
Multivector internal_field(const VectorSet& tetrad_dot, const Tetrad& tetrad, double m, double e);

struct CurvatureSet {
  double K1 = 0.0;
  double K2 = 0.0;
  double K3 = 0.0;
};

/// Frenet frame of a curve. Rates are per unit arc length of the curve, so the
/// frame derivative is d e / ds = (d e / dtau) / |x'|.
struct FrenetFrame {
  Tetrad tetrad;
  VectorSet tetrad_dot;
  CurvatureSet K;
  /// Leg e_k (k = 1..3) was completed from the coordinate basis because the
  /// curve derivatives were linearly dependent; the matching K is 0.
  std::array<bool, 4> completed{};
  double speed = 0.0;  ///< |x'|

  bool degenerate() const { return completed[1] || completed[2] || completed[3]; }
  /// Omega = (1/2) e'_mu ^ e^mu of this frame (per arc length).
  Multivector omega() const;
  /// Largest residual of the four Frenet equations.
  double frenet_residual() const;
};

/// Minkowski Gram-Schmidt on (x', x'', x''', x''''), e_0 along x'. Signs are
/// chosen so that e'_0 = K1 e^1, e'_1 = -K1 e^0 + K2 e^2, e'_2 = -K2 e^1 + K3 e^3,
/// e'_3 = -K3 e^2 with K1, K2, K3 >= 0. Throws sta::Error unless x' is timelike.
FrenetFrame frenet_frame_from_curve(const VectorSet& x_derivs);

/// Frenet frame at a state, with the curve derivatives from the equations of motion.
FrenetFrame frenet_frame(const ParticleState& s, const FieldSpec& f);

/// Omega . Omega.
double curvature_invariant(const Multivector& omega);

/// K1^2 - K2^2 - K3^2.
double curvature_invariant(const CurvatureSet& k);

struct MassRelation {
  double pv = 0.0;                   ///< p . v
  double omega_dot_s = 0.0;          ///< Omega . S with S = (1/2) R gamma2 gamma1 ~R
  double omega_dot_s_density = 0.0;  ///< Omega . (1/2) psi gamma2 gamma1 ~psi
};

/// Omega = 2 R' ~R from the rotor kinematics.
MassRelation mass_relation(const ParticleState& s, const FieldSpec& f = FieldSpec::free_field());

/// How far the rotor tetrad is from the curve Frenet frame.
struct FrameComparison {
  std::array<double, 4> leg_difference{};  ///< |e_mu(rotor) - e_mu(curve)|, max coefficient
  double tangent_alignment = 0.0;          ///< e_0(rotor) . e_0(curve)
  double omega_difference = 0.0;           ///< |Omega_rotor / |x'| - Omega_curve|
};

FrameComparison compare_frames(const ParticleState& s, const FieldSpec& f);

}  // namespace sta
