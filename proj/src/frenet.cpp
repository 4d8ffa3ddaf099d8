#include "sta_zbw/frenet.hpp"

#include <cmath>

namespace sta {

namespace {

double eta(std::size_t mu) { return Metric::diag(static_cast<int>(mu)); }

// A vector together with its derivative along the curve.
struct DualVec {
  Multivector v;
  Multivector d;
};

struct DualScalar {
  double v;
  double d;
};

DualScalar ddot(const DualVec& a, const DualVec& b) {
  return {scalar_product(a.v, b.v), scalar_product(a.d, b.v) + scalar_product(a.v, b.d)};
}

// Gram-Schmidt leg sign: e_0 along x', then alternating so every K comes out >= 0.
constexpr std::array<double, 4> kLegSign{1.0, -1.0, 1.0, -1.0};

Multivector complete_leg(const Tetrad& t, std::size_t k) {
  Multivector best;
  double best_norm = -1.0;
  for (int mu = 0; mu < 4; ++mu) {
    Multivector w = Multivector::gamma(mu);
    for (std::size_t j = 0; j < k; ++j) w -= eta(j) * scalar_product(w, t.e[j]) * t.e[j];
    const double n = std::sqrt(std::fabs(vector_square(w)));
    if (n > best_norm) {
      best_norm = n;
      best = w / n;
    }
  }
  if (k == 3) {
    const double orient = (t.e[0] * t.e[1] * t.e[2] * best).pseudoscalar_part();
    if (orient < 0.0) best = -best;
  }
  return best;
}

}  // namespace

Multivector Tetrad::up(std::size_t mu) const { return eta(mu) * e[mu]; }

double Tetrad::orthonormality_error() const {
  double err = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const double target = mu == nu ? eta(mu) : 0.0;
      err = std::fmax(err, std::fabs(scalar_product(e[mu], e[nu]) - target));
    }
  return err;
}

Tetrad rotor_tetrad(const EvenElement& psi) {
  const EvenElement r = rotor_of(psi);
  Tetrad t;
  for (int mu = 0; mu < 4; ++mu)
    t.e[static_cast<std::size_t>(mu)] = grade_project(sandwich(r, Multivector::gamma(mu)), 1);
  return t;
}

VectorSet density_tetrad(const EvenElement& psi) {
  VectorSet out;
  for (int mu = 0; mu < 4; ++mu)
    out[static_cast<std::size_t>(mu)] = grade_project(sandwich(psi, Multivector::gamma(mu)), 1);
  return out;
}

EvenElement rotor_derivative(const ParticleState& s, const FieldSpec& f) {
  const SpinorDecomposition dec = decompose(s.psi);
  const EvenElement psi_dot = eom_derivatives(s, f).psi_dot;
  const Multivector n = s.psi.mv() * reverse(s.psi.mv());
  const Multivector nd = psi_dot.mv() * reverse(s.psi.mv()) + s.psi.mv() * reverse(psi_dot.mv());
  const double a = n.scalar_part(), b = n.pseudoscalar_part();
  const double ad = nd.scalar_part(), bd = nd.pseudoscalar_part();
  const double rho = dec.rho;
  const double rho_dot = (a * ad + b * bd) / rho;
  const double beta_dot = (a * bd - b * ad) / (rho * rho);

  const Multivector inner = psi_dot.mv() - 0.5 * (rho_dot / rho) * s.psi.mv() -
                            0.5 * beta_dot * (Multivector::pseudoscalar() * s.psi.mv());
  return EvenElement::project(duality_factor(-dec.beta).mv() * inner / std::sqrt(rho));
}

Multivector rotor_omega(const ParticleState& s, const FieldSpec& f, double* residue) {
  const EvenElement r = rotor_of(s.psi);
  const Multivector full = 2.0 * rotor_derivative(s, f).mv() * reverse(r.mv());
  const Multivector omega = grade_project(full, 2);
  if (residue) *residue = (full - omega).coeff_norm();
  return omega;
}

VectorSet tetrad_derivative(const ParticleState& s, const FieldSpec& f) {
  const EvenElement r = rotor_of(s.psi);
  const EvenElement rd = rotor_derivative(s, f);
  VectorSet out;
  for (int mu = 0; mu < 4; ++mu) {
    const Multivector g = Multivector::gamma(mu);
    out[static_cast<std::size_t>(mu)] =
        grade_project(rd.mv() * g * reverse(r.mv()) + r.mv() * g * reverse(rd.mv()), 1);
  }
  return out;
}

Multivector darboux_bivector(const VectorSet& tetrad_dot, const Tetrad& tetrad) {
  Multivector omega;
  for (std::size_t mu = 0; mu < 4; ++mu) omega += wedge(tetrad_dot[mu], tetrad.up(mu));
  return 0.5 * omega;
}

double darboux_residual(const VectorSet& tetrad_dot, const Tetrad& tetrad, const Multivector& omega) {
  double r = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu) r = std::fmax(r, (tetrad_dot[mu] - dot(omega, tetrad[mu])).max_abs());
  return r;
}

Multivector internal_field(const VectorSet& tetrad_dot, const Tetrad& tetrad, double m, double e) {
  if (e == 0.0) throw Error("internal_field: charge must be nonzero");
  return (m / e) * darboux_bivector(tetrad_dot, tetrad);
}

Multivector FrenetFrame::omega() const { return darboux_bivector(tetrad_dot, tetrad); }

double FrenetFrame::frenet_residual() const {
  const Tetrad& t = tetrad;
  const std::array<Multivector, 4> rhs{
      K.K1 * t.up(1),
      -K.K1 * t.up(0) + K.K2 * t.up(2),
      -K.K2 * t.up(1) + K.K3 * t.up(3),
      -K.K3 * t.up(2),
  };
  double r = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu) r = std::fmax(r, (tetrad_dot[mu] - rhs[mu]).max_abs());
  return r;
}

FrenetFrame frenet_frame_from_curve(const VectorSet& xd) {
  const double v2 = vector_square(xd[0]);
  if (!(v2 > 0.0)) throw Error("frenet_frame_from_curve: x' must be timelike");

  FrenetFrame out;
  std::array<DualVec, 4> e;
  bool degenerate = false;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!degenerate) {
      const DualVec a{grade_project(xd[k], 1), k + 1 < 4 ? grade_project(xd[k + 1], 1) : Multivector{}};
      DualVec w = a;
      for (std::size_t j = 0; j < k; ++j) {
        const DualScalar c = ddot(a, e[j]);
        w.v -= eta(j) * c.v * e[j].v;
        w.d -= eta(j) * (c.d * e[j].v + c.v * e[j].d);
      }
      const double ww = vector_square(w.v);
      const double n = std::sqrt(std::fabs(ww));
      const double scale = a.v.coeff_norm();
      if (k > 0 && !(n > 1e-9 * scale)) {
        degenerate = true;
      } else {
        const double sign_of_square = ww > 0.0 ? 1.0 : -1.0;
        const double nd = sign_of_square * scalar_product(w.v, w.d) / n;
        e[k].v = kLegSign[k] * w.v / n;
        e[k].d = kLegSign[k] * (w.d / n - w.v * (nd / (n * n)));
      }
    }
    if (degenerate) {
      out.tetrad.e = {e[0].v, e[1].v, e[2].v, e[3].v};
      e[k].v = complete_leg(out.tetrad, k);
      out.completed[k] = true;
    }
    out.tetrad.e[k] = e[k].v;
  }

  // e_3 and completed legs follow from orthonormality.
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == 3 || out.completed[k]) {
      Multivector d;
      for (std::size_t nu = 0; nu < k; ++nu) d -= scalar_product(e[k].v, e[nu].d) * out.tetrad.up(nu);
      e[k].d = d;
    }
  }

  out.speed = std::sqrt(v2);
  for (std::size_t k = 0; k < 4; ++k) out.tetrad_dot[k] = e[k].d / out.speed;
  out.K.K1 = out.completed[1] ? 0.0 : scalar_product(out.tetrad_dot[0], out.tetrad[1]);
  out.K.K2 = out.completed[2] ? 0.0 : scalar_product(out.tetrad_dot[1], out.tetrad[2]);
  out.K.K3 = out.completed[3] ? 0.0 : scalar_product(out.tetrad_dot[2], out.tetrad[3]);
  return out;
}

FrenetFrame frenet_frame(const ParticleState& s, const FieldSpec& f) {
  const std::vector<Multivector> d = world_line_derivatives(s, f, 4);
  return frenet_frame_from_curve({d[0], d[1], d[2], d[3]});
}

double curvature_invariant(const Multivector& omega) { return scalar_product(omega, omega); }

double curvature_invariant(const CurvatureSet& k) { return k.K1 * k.K1 - k.K2 * k.K2 - k.K3 * k.K3; }

MassRelation mass_relation(const ParticleState& s, const FieldSpec& f) {
  const Multivector omega = rotor_omega(s, f);
  MassRelation r;
  r.pv = scalar_product(s.p, velocity(s.psi));
  r.omega_dot_s = scalar_product(omega, spin_bivector(s.psi));
  r.omega_dot_s_density = scalar_product(omega, spin_density(s.psi));
  return r;
}

FrameComparison compare_frames(const ParticleState& s, const FieldSpec& f) {
  const Tetrad rot = rotor_tetrad(s.psi);
  const FrenetFrame cur = frenet_frame(s, f);
  FrameComparison c;
  for (std::size_t mu = 0; mu < 4; ++mu) c.leg_difference[mu] = (rot[mu] - cur.tetrad[mu]).max_abs();
  c.tangent_alignment = scalar_product(rot[0], cur.tetrad[0]);
  c.omega_difference = (rotor_omega(s, f) / cur.speed - cur.omega()).max_abs();
  return c;
}

}  // namespace sta
