#include "sta_zbw/dynamics.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <utility>

namespace sta {

namespace {

const Multivector kG0 = Multivector::gamma(0);
// gamma0 gamma2 gamma1: right factor of psi' in the solved form of the spinor equation.
const Multivector kG0G2G1 = Multivector::gamma(0) * Multivector::gamma(2) * Multivector::gamma(1);
const Multivector kG2G1 = Multivector::gamma(2) * Multivector::gamma(1);
const Multivector kG1G2 = Multivector::gamma(1) * Multivector::gamma(2);

constexpr double kFdStep = 1e-5;

Multivector central_difference(const FieldSpec::Potential& A, const Multivector& x, const Multivector& u, double h) {
  return (A(x + u * h) - A(x - u * h)) / (2.0 * h);
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct PhaseDelta {
  EvenElement psi;
  Multivector x;
  Multivector p;
};

ParticleState advance(const ParticleState& s, const PhaseDelta& d, double h) {
  ParticleState r = s;
  r.psi = s.psi + d.psi * h;
  r.x = s.x + d.x * h;
  r.p = s.p + d.p * h;
  r.tau = s.tau + h;
  return r;
}

PhaseDelta as_delta(const Derivatives& d) { return {d.psi_dot, d.x_dot, d.p_dot}; }

bool finite_state(const ParticleState& s) {
  return std::isfinite(s.tau) && s.x.is_finite() && s.psi.mv().is_finite() && s.p.is_finite();
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* b = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= b[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t hash_mv(std::uint64_t h, const Multivector& m) {
  for (double c : m.coeffs()) h = fnv1a(h, &c, sizeof c);
  return h;
}

std::uint64_t config_fingerprint(const SimConfig& c) {
  std::uint64_t h = 14695981039346656037ull;
  h = fnv1a(h, &c.mass, sizeof c.mass);
  h = fnv1a(h, &c.charge, sizeof c.charge);
  h = hash_mv(h, c.psi0);
  h = hash_mv(h, c.x0);
  h = hash_mv(h, c.p0);
  const int kind = static_cast<int>(c.field.kind);
  h = fnv1a(h, &kind, sizeof kind);
  h = hash_mv(h, c.field.F);
  h = fnv1a(h, &c.steps_per_period, sizeof c.steps_per_period);
  h = fnv1a(h, &c.periods, sizeof c.periods);
  const int integ = static_cast<int>(c.integrator);
  h = fnv1a(h, &integ, sizeof integ);
  const unsigned char flags = static_cast<unsigned char>((c.normalize_energy ? 1 : 0) | (c.require_mass_shell ? 2 : 0));
  return fnv1a(h, &flags, 1);
}

}  // namespace

FieldSpec FieldSpec::constant(const Multivector& F, double charge) {
  FieldSpec f;
  f.kind = FieldKind::constant_F;
  f.F = grade_project(F, 2);
  f.charge = charge;
  return f;
}

FieldSpec FieldSpec::potential(Potential A, double charge) {
  FieldSpec f;
  f.kind = FieldKind::potential_A;
  f.A = std::move(A);
  f.charge = charge;
  return f;
}

Multivector FieldSpec::potential_at(const Multivector& x) const {
  if (kind != FieldKind::potential_A) return {};
  return grade_project(A(x), 1);
}

Multivector FieldSpec::potential_derivative(const Multivector& x, const Multivector& u) const {
  if (kind != FieldKind::potential_A) return {};
  const Multivector coarse = central_difference(A, x, u, kFdStep);
  const Multivector fine = central_difference(A, x, u, 0.5 * kFdStep);
  return grade_project((4.0 * fine - coarse) / 3.0, 1);
}

Multivector FieldSpec::field_at(const Multivector& x) const {
  switch (kind) {
    case FieldKind::free:
      return {};
    case FieldKind::constant_F:
      return F;
    case FieldKind::potential_A: {
      Multivector out;
      for (int mu = 0; mu < 4; ++mu)
        out += wedge(Multivector::gamma_up(mu), potential_derivative(x, Multivector::gamma(mu)));
      return grade_project(out, 2);
    }
  }
  return {};
}

Multivector kinetic_momentum(const ParticleState& s, const FieldSpec& f) {
  return s.p - f.charge * f.potential_at(s.x);
}

Derivatives eom_derivatives(const ParticleState& s, const FieldSpec& f) {
  const Multivector pi = kinetic_momentum(s, f);
  Derivatives d;
  const Multivector psi_dot = -(pi * s.psi.mv() * kG0G2G1);
  d.psi_dot = EvenElement(psi_dot, 1e-10);
  d.x_dot = grade_project(s.psi.mv() * kG0 * reverse(s.psi.mv()), 1);
  if (f.kind != FieldKind::free && f.charge != 0.0) {
    const Multivector force = f.charge * dot(f.field_at(s.x), d.x_dot);
    d.p_dot = grade_project(force + f.charge * f.potential_derivative(s.x, d.x_dot), 1);
  }
  return d;
}

Multivector velocity(const EvenElement& psi) {
  const Multivector full = psi.mv() * kG0 * reverse(psi.mv());
  const Multivector v = grade_project(full, 1);
  const double scale = std::fmax(1.0, psi.mv().coeff_norm() * psi.mv().coeff_norm());
  if ((full - v).coeff_norm() > 1e-12 * scale) throw Error("velocity: psi gamma0 ~psi is not a vector");
  return v;
}

double hamiltonian(const ParticleState& s) { return scalar_product(s.p, velocity(s.psi)); }

Multivector spin_bivector(const EvenElement& psi) {
  const EvenElement r = rotor_of(psi);
  return grade_project(0.5 * sandwich(r, kG2G1), 2);
}

Multivector spin_density(const EvenElement& psi) {
  return grade_project(0.5 * (psi.mv() * kG2G1 * reverse(psi.mv())), 2);
}

Tensor2 bivector_components(const Multivector& b) {
  Tensor2 t{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      const double c = Metric::diag(mu) * Metric::diag(nu) * b[(1u << mu) | (1u << nu)];
      t[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = c;
      t[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] = -c;
    }
  return t;
}

Tensor2 spin_tensor(const EvenElement& psi) { return bivector_components(spin_density(psi)); }

Tensor2 total_angular_momentum(const ParticleState& s) {
  return bivector_components(wedge(grade_project(s.x, 1), grade_project(s.p, 1)) + spin_density(s.psi));
}

double eval_lagrangian(const ParticleState& s, const Derivatives& d, const FieldSpec& f) {
  const Multivector v = s.psi.mv() * kG0 * reverse(s.psi.mv());
  const Multivector A = f.potential_at(s.x);
  const Multivector sum = reverse(s.psi.mv()) * d.psi_dot.mv() * kG1G2 + s.p * (d.x_dot - v) + f.charge * A * v;
  return sum.scalar_part();
}

double eval_lagrangian_matrix_form(const ParticleState& s, const Derivatives& d, const FieldSpec& f) {
  const DiracColumn z = spinor_to_column(s.psi);
  const DiracColumn zd = spinor_to_column(d.psi_dot);
  const DiracColumn zb = bar(z);
  const DiracColumn zdb = bar(zd);
  Complex kinetic{};
  for (std::size_t i = 0; i < 4; ++i) kinetic += zdb[i] * z[i] - zb[i] * zd[i];
  kinetic *= Complex(0.0, 0.5);

  const auto vbz = bz_velocity(z);  // zbar gamma^mu z
  const Multivector A = f.potential_at(s.x);
  double constraint = 0.0;
  double coupling = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const auto m = static_cast<std::size_t>(mu);
    const double p_lower = Metric::diag(mu) * s.p.component(mu);
    const double a_lower = Metric::diag(mu) * A.component(mu);
    constraint += p_lower * (d.x_dot.component(mu) - vbz[m]);
    coupling += f.charge * a_lower * vbz[m];
  }
  return kinetic.real() + constraint + coupling;
}

std::vector<EvenElement> spinor_derivatives(const ParticleState& s, const FieldSpec& f, int order) {
  if (f.kind == FieldKind::potential_A)
    throw Error("world-line derivative recursion needs a free or constant field");
  const double e = f.kind == FieldKind::constant_F ? f.charge : 0.0;
  std::vector<EvenElement> psi{s.psi};
  std::vector<Multivector> pi{kinetic_momentum(s, f)};
  std::vector<Multivector> x;  // x[k] = x^(k+1)
  for (int n = 0; n < order; ++n) {
    Multivector next;
    for (int k = 0; k <= n; ++k)
      next -= binomial(n, k) * (pi[static_cast<std::size_t>(k)] * psi[static_cast<std::size_t>(n - k)].mv() * kG0G2G1);
    Multivector xd;
    for (int k = 0; k <= n; ++k)
      xd += binomial(n, k) * (psi[static_cast<std::size_t>(k)].mv() * kG0 * reverse(psi[static_cast<std::size_t>(n - k)].mv()));
    xd = grade_project(xd, 1);
    x.push_back(xd);
    psi.push_back(EvenElement::project(next));
    pi.push_back(e != 0.0 ? e * dot(f.F, xd) : Multivector{});
  }
  return psi;
}

std::vector<Multivector> world_line_derivatives(const ParticleState& s, const FieldSpec& f, int order) {
  const std::vector<EvenElement> psi = spinor_derivatives(s, f, order - 1);
  std::vector<Multivector> x;
  for (int n = 0; n < order; ++n) {
    Multivector xd;
    for (int k = 0; k <= n; ++k)
      xd += binomial(n, k) * (psi[static_cast<std::size_t>(k)].mv() * kG0 * reverse(psi[static_cast<std::size_t>(n - k)].mv()));
    x.push_back(grade_project(xd, 1));
  }
  return x;
}

void SimConfig::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw Error("config: mass must be positive");
  if (steps_per_period < 16) throw Error("config: steps_per_period must be >= 16");
  if (!(periods > 0.0) || !std::isfinite(periods)) throw Error("config: periods must be positive");
  if (off_grade_norm(x0, 1) != 0.0) throw Error("config: x0 must be a vector");
  if (off_grade_norm(p0, 1) != 0.0) throw Error("config: p0 must be a vector");
  if (!psi0.mv().is_finite() || psi0.mv().coeff_norm() == 0.0) throw Error("config: psi0 must be a nonzero even element");
  if (field.kind == FieldKind::potential_A && !field.A) throw Error("config: potential field without A(x)");
  if (field.kind == FieldKind::free && require_mass_shell) {
    const double p2 = vector_square(p0);
    if (!(std::fabs(p2 - mass * mass) <= 1e-9 * mass * mass)) throw Error("config: p0 is off the mass shell");
  }
  const double n = periods * steps_per_period;
  if (n > 1e9) throw Error("config: too many steps");
}

double SimConfig::zbw_period() const { return std::numbers::pi / mass; }

double SimConfig::step() const { return zbw_period() / steps_per_period; }

std::size_t SimConfig::total_steps() const {
  return static_cast<std::size_t>(std::llround(periods * static_cast<double>(steps_per_period)));
}

ParticleState initial_state(const SimConfig& cfg) {
  ParticleState s{0.0, cfg.x0, cfg.psi0, cfg.p0};
  if (cfg.normalize_energy) {
    const double h0 = hamiltonian(s);
    if (!(h0 > 0.0)) throw Error("config: p0 . v0 must be positive to normalise H = m");
    s.psi = s.psi * std::sqrt(cfg.mass / h0);
  }
  return s;
}

ParticleState step_state(const ParticleState& s, const FieldSpec& f, double h, Integrator method) {
  if (method == Integrator::euler) return advance(s, as_delta(eom_derivatives(s, f)), h);

  const PhaseDelta k1 = as_delta(eom_derivatives(s, f));
  const PhaseDelta k2 = as_delta(eom_derivatives(advance(s, k1, 0.5 * h), f));
  const PhaseDelta k3 = as_delta(eom_derivatives(advance(s, k2, 0.5 * h), f));
  const PhaseDelta k4 = as_delta(eom_derivatives(advance(s, k3, h), f));
  ParticleState r = s;
  const double w = h / 6.0;
  r.psi = s.psi + (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi) * w;
  r.x = s.x + (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x) * w;
  r.p = s.p + (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p) * w;
  r.tau = s.tau + h;
  return r;
}

Trajectory::Trajectory(std::vector<TrajectorySample> samples, double step, double mass, FieldSpec field,
                       std::uint64_t config_hash)
    : samples_(std::move(samples)), step_(step), mass_(mass), field_(std::move(field)), config_hash_(config_hash) {}

Trajectory integrate(const SimConfig& cfg) {
  cfg.validate();
  const double h = cfg.step();
  const std::size_t n = cfg.total_steps();

  auto make_sample = [](const ParticleState& s) {
    TrajectorySample t;
    t.state = s;
    t.v = velocity(s.psi);
    t.H = scalar_product(s.p, t.v);
    t.S = spin_density(s.psi);
    return t;
  };

  std::vector<TrajectorySample> samples;
  samples.reserve(n + 1);
  ParticleState s = initial_state(cfg);
  samples.push_back(make_sample(s));
  const ParticleState start = s;
  for (std::size_t i = 1; i <= n; ++i) {
    s = step_state(s, cfg.field, h, cfg.integrator);
    // tau from the index keeps the grid exactly uniform.
    s.tau = start.tau + h * static_cast<double>(i);
    if (!finite_state(s)) throw NumericalAbort("integrate: non-finite state at sample " + std::to_string(i), i);
    samples.push_back(make_sample(s));
  }
  return Trajectory(std::move(samples), h, cfg.mass, cfg.field, config_fingerprint(cfg));
}

Multivector trapezoid_mean_velocity(const Trajectory& t, std::size_t first, std::size_t count) {
  if (count == 0 || first + count >= t.size()) throw Error("trapezoid_mean_velocity: range outside trajectory");
  Multivector sum = 0.5 * (t[first].v + t[first + count].v);
  for (std::size_t i = first + 1; i < first + count; ++i) sum += t[i].v;
  return sum / static_cast<double>(count);
}

namespace {

std::size_t samples_per_period(const Trajectory& t) {
  return static_cast<std::size_t>(std::llround(std::numbers::pi / t.mass() / t.step()));
}

}  // namespace

Multivector zbw_average(const Trajectory& t, int periods) {
  if (t.field().kind != FieldKind::free) throw Error("zbw_average: defined for free trajectories only");
  const std::size_t spp = samples_per_period(t);
  const std::size_t available = (t.size() - 1) / spp;
  if (available < 1) throw Error("zbw_average: trajectory spans less than one zitterbewegung period");
  std::size_t use = available;
  if (periods > 0) {
    if (static_cast<std::size_t>(periods) > available) throw Error("zbw_average: not enough periods in trajectory");
    use = static_cast<std::size_t>(periods);
  }
  return trapezoid_mean_velocity(t, 0, use * spp);
}

double zbw_frequency(const Trajectory& t) {
  if (t.size() < 3) throw Error("zbw_frequency: trajectory too short");
  const Multivector p = t[0].state.p;
  const double p2 = vector_square(p);
  if (!(p2 > 0.0)) throw Error("zbw_frequency: momentum must be timelike");

  // Transverse velocity v - (v.p) p / p^2; pick the component with the widest swing.
  std::vector<std::array<double, 4>> vt;
  vt.reserve(t.size());
  std::array<double, 4> lo{}, hi{};
  lo.fill(1e300);
  hi.fill(-1e300);
  for (const auto& s : t.samples()) {
    const Multivector perp = s.v - p * (scalar_product(s.v, p) / p2);
    const auto c = perp.vector_components();
    for (std::size_t k = 0; k < 4; ++k) {
      lo[k] = std::fmin(lo[k], c[k]);
      hi[k] = std::fmax(hi[k], c[k]);
    }
    vt.push_back(c);
  }
  std::size_t axis = 0;
  for (std::size_t k = 1; k < 4; ++k)
    if (hi[k] - lo[k] > hi[axis] - lo[axis]) axis = k;
  const double amplitude = 0.5 * (hi[axis] - lo[axis]);
  if (!(amplitude > 1e-10)) throw Error("zbw_frequency: no oscillation detected (trivial solution?)");

  // Centre on the mean over whole periods when available, else the mid-range.
  double centre = 0.5 * (hi[axis] + lo[axis]);
  const std::size_t spp = samples_per_period(t);
  if (spp > 0 && (t.size() - 1) / spp >= 1) {
    const std::size_t count = ((t.size() - 1) / spp) * spp;
    double sum = 0.5 * (vt[0][axis] + vt[count][axis]);
    for (std::size_t i = 1; i < count; ++i) sum += vt[i][axis];
    centre = sum / static_cast<double>(count);
  }

  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < vt.size(); ++i) {
    const double a = vt[i][axis] - centre;
    const double b = vt[i + 1][axis] - centre;
    if ((a < 0.0 && b >= 0.0) || (a > 0.0 && b <= 0.0)) {
      const double frac = a / (a - b);
      crossings.push_back(t[i].state.tau + frac * t.step());
    }
  }
  if (crossings.size() < 3) throw Error("zbw_frequency: fewer than three zero crossings");
  const double mean_gap = (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
  return std::numbers::pi / mean_gap;
}

}  // namespace sta
