#include "sta_zbw/dirac.hpp"

#include <cmath>

namespace sta {

namespace {

const Multivector kG0 = Multivector::gamma(0);
const Multivector kG12 = Multivector::gamma(1) * Multivector::gamma(2);
const Multivector kJ = Multivector::gamma(2) * Multivector::gamma(1);

Multivector vector_inverse(const Multivector& v) {
  const double v2 = vector_square(v);
  if (v2 == 0.0) throw DegenerateError("null velocity has no inverse");
  return v / v2;
}

Multivector plane_wave_derivative(const EvenElement& psi0, double m, const Multivector& x, double sign) {
  // d/dx^0 of psi0 exp(sign J m x^0); J commutes with the exponential.
  return psi0.mv() * (sign * m) * kJ * plane_wave(EvenElement::identity(), m, x, sign).mv();
}

}  // namespace

Multivector nonlinear_residual(const ParticleState& s, const Derivatives& d, const FieldSpec& f) {
  return d.psi_dot.mv() * kG12 + kinetic_momentum(s, f) * s.psi.mv() * kG0;
}

Multivector free_nonlinear_residual(const ParticleState& s, const Derivatives& d, double m) {
  const EvenElement inv = invert(s.psi);
  const Multivector v = velocity(s.psi);
  const Multivector p_over_m = inv.mv() * v * reverse(inv.mv());
  return d.psi_dot.mv() * kG12 + m * p_over_m * s.psi.mv() * kG0;
}

Multivector streamline_dh_residual(const ParticleState& s, const Derivatives& d, double m) {
  const Multivector grad = vector_inverse(velocity(s.psi)) * d.psi_dot.mv();
  return grad * kG12 + m * s.psi.mv() * kG0;
}

Multivector linearized_residual(const ParticleState& s, const Derivatives& d, double m) {
  const Multivector v = velocity(s.psi);
  // (a . d) psi for d psi = v^-1 psi' is (a.v / v^2) psi'.
  const double along = scalar_product(s.p, v) / (m * vector_square(v));
  return along * d.psi_dot.mv() * kG12 + s.p * s.psi.mv() * kG0;
}

EvenElement plane_wave(const EvenElement& psi0, double m, const Multivector& x, double sign) {
  const double tau = scalar_product(kG0, x);
  return psi0 * exp_even(EvenElement::project(kJ * (sign * m * tau)));
}

Multivector dh_residual_planewave(const EvenElement& psi0, double m, const Multivector& x, double sign) {
  const Multivector grad = kG0 * plane_wave_derivative(psi0, m, x, sign);
  return grad * kG12 + m * plane_wave(psi0, m, x, sign).mv() * kG0;
}

ParticleState plane_wave_state(const EvenElement& psi0, double m, const Multivector& x) {
  return {scalar_product(kG0, x), grade_project(x, 1), plane_wave(psi0, m, x), m * kG0};
}

Derivatives plane_wave_derivatives(const EvenElement& psi0, double m, const Multivector& x) {
  const EvenElement psi = plane_wave(psi0, m, x);
  const Multivector v = velocity(psi);
  Derivatives d;
  d.psi_dot = EvenElement::project(v.component(0) * plane_wave_derivative(psi0, m, x, -1.0));
  d.x_dot = v;
  return d;
}

std::string to_string(ResidualKind k) {
  switch (k) {
    case ResidualKind::nl12: return "nl12";
    case ResidualKind::nl15: return "nl15";
    case ResidualKind::dh16: return "dh16";
    case ResidualKind::lin15p: return "lin15p";
  }
  return "?";
}

ResidualReport make_report(ResidualKind kind, std::vector<double> norms) {
  ResidualReport r;
  r.kind = kind;
  double sq = 0.0;
  for (double n : norms) {
    r.max = std::fmax(r.max, n);
    sq += n * n;
  }
  r.rms = norms.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(norms.size()));
  r.norms = std::move(norms);
  return r;
}

LinearizationReport linearization_check(const Trajectory& t) {
  if (t.field().kind != FieldKind::free) throw Error("linearization_check: free trajectory required");
  const Multivector mean = zbw_average(t);
  const double m = t.mass();
  LinearizationReport out;
  out.mean_velocity_error = (mean - t[0].state.p / m).max_abs();

  std::vector<double> nl, lin, dh;
  nl.reserve(t.size());
  lin.reserve(t.size());
  dh.reserve(t.size());
  for (const auto& smp : t.samples()) {
    const Derivatives d = eom_derivatives(smp.state, t.field());
    nl.push_back(free_nonlinear_residual(smp.state, d, m).coeff_norm());
    lin.push_back(linearized_residual(smp.state, d, m).coeff_norm());
    dh.push_back(streamline_dh_residual(smp.state, d, m).coeff_norm());
  }
  out.nonlinear = make_report(ResidualKind::nl15, std::move(nl));
  out.linearized = make_report(ResidualKind::lin15p, std::move(lin));
  out.dirac = make_report(ResidualKind::dh16, std::move(dh));
  return out;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error("log_log_slope: need two or more matching points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw Error("log_log_slope: values must be positive");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw Error("log_log_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / den;
}

}  // namespace sta
