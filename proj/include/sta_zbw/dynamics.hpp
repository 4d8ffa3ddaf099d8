#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sta_zbw/even.hpp"
#include "sta_zbw/matrix_rep.hpp"
#include "sta_zbw/multivector.hpp"

namespace sta {

/// Phase-space point (tau, x, psi, p) of the Barut-Zanghi system.
struct ParticleState {
  double tau = 0.0;
  Multivector x;    ///< position 4-vector
  EvenElement psi;  ///< Dirac-Hestenes spinor
  Multivector p;    ///< momentum 4-vector
};

enum class FieldKind { free, constant_F, potential_A };

/// Electromagnetic environment.
///
/// - free: F = 0, A = 0.
/// - constant_F: uniform bivector F; no potential is used and `p` plays the
///   role of the kinetic momentum, so pi = p and dp/dtau = e F.v.
/// - potential_A: callable A(x); F = d^A and all derivatives of A are taken by
///   Richardson-extrapolated central differences (step 1e-5). Here `p` is the
///   canonical momentum and pi = p - e A(x).
struct FieldSpec {
  using Potential = std::function<Multivector(const Multivector&)>;

  FieldKind kind = FieldKind::free;
  Multivector F;
  Potential A;
  double charge = 0.0;

  static FieldSpec free_field() { return {}; }
  static FieldSpec constant(const Multivector& F, double charge);
  static FieldSpec potential(Potential A, double charge);

  /// A(x); zero unless kind == potential_A.
  Multivector potential_at(const Multivector& x) const;
  /// F(x) as a bivector.
  Multivector field_at(const Multivector& x) const;
  /// (u . d) A at x.
  Multivector potential_derivative(const Multivector& x, const Multivector& u) const;
};

/// d/dtau of every phase-space component.
struct Derivatives {
  EvenElement psi_dot;
  Multivector x_dot;
  Multivector p_dot;
};

/// pi = p - e A(x).
Multivector kinetic_momentum(const ParticleState& s, const FieldSpec& f);

/// The three equations of motion
///   psi' gamma1 gamma2 + pi psi gamma0 = 0,  x' = psi gamma0 ~psi,  pi' = e F.x'
/// solved as psi' = -pi psi gamma0 gamma2 gamma1.
Derivatives eom_derivatives(const ParticleState& s, const FieldSpec& f);

/// v = <psi gamma0 ~psi>_1. Throws sta::Error if the non-vector residue exceeds
/// 1e-12 relative to |psi|^2.
Multivector velocity(const EvenElement& psi);

/// H = p . v.
double hamiltonian(const ParticleState& s);

/// Unit-rotor spin S = (1/2) R gamma2 gamma1 ~R. Throws DegenerateError for light-like psi.
Multivector spin_bivector(const EvenElement& psi);

/// Density-weighted spin (1/2) psi gamma2 gamma1 ~psi (= rho S for beta = 0).
/// This is the spin that enters the conserved total angular momentum.
Multivector spin_density(const EvenElement& psi);

/// Lower-index components T_{mu nu} of a bivector (T_{mu nu} = -T_{nu mu}).
Tensor2 bivector_components(const Multivector& b);

/// Spin tensor S_{mu nu}: lowered components of spin_density.
Tensor2 spin_tensor(const EvenElement& psi);

/// J_{mu nu} = L_{mu nu} + S_{mu nu} with L_{mu nu} = x_mu p_nu - x_nu p_mu.
Tensor2 total_angular_momentum(const ParticleState& s);

/// Diagnostic Lagrangian <~psi psi' gamma1 gamma2 + p (x' - psi gamma0 ~psi) + e A psi gamma0 ~psi>_0.
double eval_lagrangian(const ParticleState& s, const Derivatives& d, const FieldSpec& f);

/// The same Lagrangian written with Dirac columns:
/// (i/2)(zbar' z - zbar z') + p_mu (x'^mu - zbar gamma^mu z) + e A_mu zbar gamma^mu z.
double eval_lagrangian_matrix_form(const ParticleState& s, const Derivatives& d, const FieldSpec& f);

/// World-line derivatives x^(1) .. x^(order) at s, from the equations of motion
/// (Leibniz recursion). Supported for free and constant_F fields; throws
/// sta::Error for potential_A.
std::vector<Multivector> world_line_derivatives(const ParticleState& s, const FieldSpec& f, int order);

/// Spinor derivatives psi^(0) .. psi^(order) along the same recursion.
std::vector<EvenElement> spinor_derivatives(const ParticleState& s, const FieldSpec& f, int order);

enum class Integrator { rk4, euler };

struct SimConfig {
  double mass = 1.0;
  double charge = 0.0;
  EvenElement psi0 = EvenElement::identity();
  Multivector x0;
  Multivector p0 = Multivector::gamma(0);
  FieldSpec field;
  int steps_per_period = 1000;
  double periods = 1.0;
  Integrator integrator = Integrator::rk4;
  /// Rescale psi0 so that H = p0 . v0 = m at tau = 0.
  bool normalize_energy = true;
  /// For free runs, demand |p0^2 - m^2| <= 1e-9 m^2.
  bool require_mass_shell = true;

  /// Throws sta::Error describing the first violated constraint.
  void validate() const;
  /// Zitterbewegung period pi/m (angular frequency 2m).
  double zbw_period() const;
  /// Fixed step (zbw period) / steps_per_period.
  double step() const;
  /// Total number of steps, round(periods * steps_per_period).
  std::size_t total_steps() const;
};

/// Initial state after applying the energy normalisation, if requested.
ParticleState initial_state(const SimConfig& cfg);

/// Thrown when the state stops being finite.
class NumericalAbort : public Error {
 public:
  NumericalAbort(const std::string& what, std::size_t sample) : Error(what), sample_(sample) {}
  std::size_t sample_index() const { return sample_; }

 private:
  std::size_t sample_;
};

struct TrajectorySample {
  ParticleState state;
  Multivector v;  ///< psi gamma0 ~psi
  double H = 0.0;
  Multivector S;  ///< spin_density
};

/// Uniformly sampled solution of the equations of motion.
class Trajectory {
 public:
  Trajectory(std::vector<TrajectorySample> samples, double step, double mass, FieldSpec field, std::uint64_t config_hash);

  std::span<const TrajectorySample> samples() const { return samples_; }
  const TrajectorySample& operator[](std::size_t i) const { return samples_[i]; }
  std::size_t size() const { return samples_.size(); }
  double step() const { return step_; }
  double mass() const { return mass_; }
  const FieldSpec& field() const { return field_; }
  std::uint64_t config_hash() const { return config_hash_; }
  double span() const { return step_ * static_cast<double>(samples_.size() - 1); }

 private:
  std::vector<TrajectorySample> samples_;
  double step_;
  double mass_;
  FieldSpec field_;
  std::uint64_t config_hash_;
};

/// Fixed-step integration of psi, x and p together. Deterministic.
Trajectory integrate(const SimConfig& cfg);

/// One integrator step, exposed for the convergence harness.
ParticleState step_state(const ParticleState& s, const FieldSpec& f, double h, Integrator method);

/// Trapezoid mean of v over samples [first, first + count].
Multivector trapezoid_mean_velocity(const Trajectory& t, std::size_t first, std::size_t count);

/// Mean velocity over the largest whole number of zbw periods covered by t
/// (all of them when periods == 0, else exactly `periods`). Throws sta::Error
/// if t spans less than one period or the field is not free.
Multivector zbw_average(const Trajectory& t, int periods = 0);

/// Angular frequency of the transverse velocity oscillation, from linearly
/// interpolated zero crossings. Throws sta::Error("no oscillation ...") if the
/// amplitude is below 1e-10.
double zbw_frequency(const Trajectory& t);

}  // namespace sta
