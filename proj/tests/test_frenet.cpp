#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "doctest.h"
#include "sta_zbw/frenet.hpp"
#include "test_support.hpp"

using namespace sta;
using sta::testing::max_diff;

namespace {

const Multivector g0 = Multivector::gamma(0);
const Multivector g1 = Multivector::gamma(1);
const Multivector g2 = Multivector::gamma(2);
const Multivector g3 = Multivector::gamma(3);
const Multivector J = g2 * g1;

SimConfig helix(double m, int spp, double periods, double alpha = 0.5) {
  SimConfig c;
  c.mass = m;
  c.p0 = m * g0;
  c.psi0 = exp_even(EvenElement(g1 * g0 * (alpha / 2)));
  c.steps_per_period = spp;
  c.periods = periods;
  return c;
}

// n-th derivative of x(tau) = (a tau, r cos w tau, r sin w tau, b tau + q cos(nu tau)).
Multivector curve_derivative(int n, double tau, double a, double r, double w, double b, double q = 0.0, double nu = 1.0) {
  auto trig = [](int k, double t) {  // d^k/dt^k cos(t)
    switch (k % 4) {
      case 0: return std::cos(t);
      case 1: return -std::sin(t);
      case 2: return -std::cos(t);
      default: return std::sin(t);
    }
  };
  const double c = r * std::pow(w, n) * trig(n, w * tau);
  const double s = r * std::pow(w, n) * trig(n + 3, w * tau);  // sin = cos(t - pi/2)
  const double lin0 = n == 1 ? a : 0.0;
  const double lin3 = n == 1 ? b : 0.0;
  return Multivector::vector(lin0, c, s, lin3 + q * std::pow(nu, n) * trig(n, nu * tau));
}

VectorSet curve_derivs(double tau, double a, double r, double w, double b, double q = 0.0, double nu = 1.0) {
  return {curve_derivative(1, tau, a, r, w, b, q, nu), curve_derivative(2, tau, a, r, w, b, q, nu),
          curve_derivative(3, tau, a, r, w, b, q, nu), curve_derivative(4, tau, a, r, w, b, q, nu)};
}

template <typename F>
Multivector richardson(F f, double h) {
  return (8.0 * (f(h) - f(-h)) - (f(2 * h) - f(-2 * h))) / (12.0 * h);
}

// Curvatures from the Gram-Schmidt norms alone: K_i = |w_{i+1}| / (|w_i| |w_1|).
CurvatureSet norm_curvatures(const VectorSet& xd) {
  std::array<Multivector, 4> w;
  std::array<double, 4> n{};
  for (std::size_t k = 0; k < 4; ++k) {
    w[k] = xd[k];
    for (std::size_t j = 0; j < k; ++j) w[k] -= w[j] * (scalar_product(xd[k], w[j]) / vector_square(w[j]));
    n[k] = std::sqrt(std::fabs(vector_square(w[k])));
  }
  return {n[1] / (n[0] * n[0]), n[2] / (n[1] * n[0]), n[3] / (n[2] * n[0])};
}

}  // namespace

TEST_CASE("rotor tetrad") {
  const Tetrad t = rotor_tetrad(EvenElement::identity());
  for (int mu = 0; mu < 4; ++mu) CHECK(t[static_cast<std::size_t>(mu)] == Multivector::gamma(mu));

  std::mt19937_64 rng(307);
  for (int i = 0; i < 100; ++i) {
    const EvenElement r = sta::testing::random_rotor(rng, 1.2);
    CHECK(rotor_tetrad(r).orthonormality_error() <= 1e-12);
    CHECK(rotor_tetrad(r)[0].component(0) > 0.0);
    // Scale and duality angle drop out; the density tetrad keeps rho.
    const EvenElement psi = duality_factor(0.4) * r * 1.7;
    CHECK(max_diff(rotor_tetrad(psi)[1], rotor_tetrad(r)[1]) <= 1e-12);
    CHECK(max_diff(density_tetrad(r * 1.7)[2], 1.7 * 1.7 * rotor_tetrad(r)[2]) <= 1e-12);
  }

  // Trivial solution: e_0 fixed, e_1 and e_2 turn at rate 2m.
  const double m = 1.1, tau = 0.4;
  const Tetrad tt = rotor_tetrad(exp_even(EvenElement(-J * (m * tau))));
  CHECK(max_diff(tt[0], g0) <= 1e-15);
  CHECK(max_diff(tt[1], g1 * std::cos(2 * m * tau) + g2 * std::sin(2 * m * tau)) <= 1e-15);
  CHECK(max_diff(tt[3], g3) <= 1e-15);
  CHECK_THROWS_AS(rotor_tetrad(EvenElement{}), DegenerateError);
}

TEST_CASE("rotor derivative and Darboux bivector") {
  const double m = 1.3;
  const ParticleState triv{0.0, Multivector{}, EvenElement::identity(), m * g0};
  const FieldSpec free = FieldSpec::free_field();
  CHECK(max_diff(rotor_derivative(triv, free), -m * J) <= 1e-15);
  double residue = 1.0;
  CHECK(max_diff(rotor_omega(triv, free, &residue), 2 * m * g1 * g2) <= 1e-15);
  CHECK(residue <= 1e-15);
  const Multivector omega = darboux_bivector(tetrad_derivative(triv, free), rotor_tetrad(triv.psi));
  CHECK(max_diff(omega, 2 * m * g1 * g2) <= 1e-14);
  CHECK(curvature_invariant(omega) == doctest::Approx(-4 * m * m));

  CHECK(max_diff(internal_field(tetrad_derivative(triv, free), rotor_tetrad(triv.psi), 1.0, -1.0),
                 -(2 * m) * g1 * g2) <= 1e-14);
  CHECK_THROWS_AS(internal_field(tetrad_derivative(triv, free), rotor_tetrad(triv.psi), 1.0, 0.0), Error);

  // Along a helix: both routes to Omega agree and the Darboux relation holds.
  const Trajectory t = integrate(helix(1.0, 200, 2.0));
  for (std::size_t i = 0; i < t.size(); i += 17) {
    const ParticleState& s = t[i].state;
    const Tetrad e = rotor_tetrad(s.psi);
    const VectorSet ed = tetrad_derivative(s, free);
    double res = 1.0;
    const Multivector w = rotor_omega(s, free, &res);
    const Multivector w20 = darboux_bivector(ed, e);
    CHECK(res <= 1e-10);
    CHECK(max_diff(w, w20) <= 1e-9);
    CHECK(darboux_residual(ed, e, w20) <= 1e-9);
    CHECK(e.orthonormality_error() <= 1e-10);

    // Lorentz-force form: e_0' = (e/m) F.e_0 with F = (m/e) Omega.
    const double charge = -0.5;
    const Multivector fint = internal_field(ed, e, 1.0, charge);
    CHECK(max_diff(ed[0], (charge / 1.0) * dot(fint, e[0])) <= 1e-9);
  }
}

TEST_CASE("rotor frame derivative matches finite differences") {
  std::mt19937_64 rng(311);
  const FieldSpec free = FieldSpec::free_field();
  for (int i = 0; i < 10; ++i) {
    const double m = 0.7 + 0.2 * i;
    const Multivector p = sandwich(sta::testing::random_rotor(rng, 0.5), m * g0);
    const EvenElement psi0 = sta::testing::random_even(rng);
    const double tau = 0.3 * i;
    auto state = [&](double t) {
      return ParticleState{t, Multivector{}, bz_analytic_spinor(psi0, grade_project(p, 1), m, t), grade_project(p, 1)};
    };
    const VectorSet ed = tetrad_derivative(state(tau), free);
    for (std::size_t mu = 0; mu < 4; ++mu) {
      const Multivector fd = richardson([&](double h) { return rotor_tetrad(state(tau + h).psi)[mu]; }, 1e-4);
      CHECK(max_diff(ed[mu], fd) <= 1e-7);
    }
  }
}

TEST_CASE("Frenet frame of a circular helix matches closed forms") {
  const double a = 2.0, r = 0.7, w = 1.3, b = 0.4;
  const double n2 = a * a - r * r * w * w - b * b;
  const double k1 = r * w * w / n2;
  const double k2 = w * std::sqrt(a * a - b * b) / n2;
  for (double tau : {0.0, 0.37, 1.9}) {
    const VectorSet xd = curve_derivs(tau, a, r, w, b);
    const FrenetFrame f = frenet_frame_from_curve(xd);
    CHECK(f.K.K1 == doctest::Approx(k1).epsilon(1e-8));
    CHECK(f.K.K2 == doctest::Approx(k2).epsilon(1e-8));
    CHECK(f.K.K3 == 0.0);
    CHECK(f.completed[3]);
    CHECK_FALSE(f.completed[2]);
    CHECK(f.tetrad.orthonormality_error() <= 1e-12);
    CHECK(f.frenet_residual() <= 1e-8);
    CHECK(curvature_invariant(f.omega()) == doctest::Approx(curvature_invariant(f.K)).epsilon(1e-8));
  }
}

TEST_CASE("Frenet frame of a curve with all three curvatures") {
  const double a = 3.0, r = 0.5, w = 1.1, b = 0.2, q = 0.6, nu = 0.7;
  for (double tau : {0.2, 0.9, 2.4}) {
    const VectorSet xd = curve_derivs(tau, a, r, w, b, q, nu);
    const FrenetFrame f = frenet_frame_from_curve(xd);
    REQUIRE_FALSE(f.degenerate());
    const CurvatureSet ref = norm_curvatures(xd);
    CHECK(f.K.K1 == doctest::Approx(ref.K1).epsilon(1e-10));
    CHECK(f.K.K2 == doctest::Approx(ref.K2).epsilon(1e-10));
    CHECK(f.K.K3 == doctest::Approx(ref.K3).epsilon(1e-10));
    CHECK(f.K.K1 > 0.0);
    CHECK(f.K.K2 > 0.0);
    CHECK(f.K.K3 > 0.0);
    CHECK(f.frenet_residual() <= 1e-8);
    CHECK(curvature_invariant(f.omega()) == doctest::Approx(curvature_invariant(f.K)).epsilon(1e-8));
    CHECK(max_diff(f.tetrad[0], xd[0] / f.speed) <= 1e-15);

    // Frame derivative against Richardson differences in tau.
    for (std::size_t mu = 0; mu < 4; ++mu) {
      const Multivector fd = richardson(
          [&](double h) { return frenet_frame_from_curve(curve_derivs(tau + h, a, r, w, b, q, nu)).tetrad[mu]; }, 1e-3);
      CHECK(max_diff(f.tetrad_dot[mu] * f.speed, fd) <= 1e-7);
    }
  }
}

TEST_CASE("degenerate curves") {
  const FrenetFrame line = frenet_frame_from_curve({g0 * 1.5, Multivector{}, Multivector{}, Multivector{}});
  CHECK(line.K.K1 == 0.0);
  CHECK(line.K.K2 == 0.0);
  CHECK(line.K.K3 == 0.0);
  CHECK(line.completed[1]);
  CHECK(line.completed[2]);
  CHECK(line.completed[3]);
  CHECK(line.tetrad.orthonormality_error() <= 1e-15);
  CHECK(line.frenet_residual() == 0.0);
  CHECK((line.tetrad[0] * line.tetrad[1] * line.tetrad[2] * line.tetrad[3]).pseudoscalar_part() > 0.0);

  CHECK_THROWS_AS(frenet_frame_from_curve({g1, g0, g0, g0}), Error);
  CHECK_THROWS_AS(frenet_frame_from_curve({g0 + g1, g2, g2, g2}), Error);
}

TEST_CASE("BZ solutions: constant curvatures and the invariant") {
  const FieldSpec free = FieldSpec::free_field();
  const double m = 1.0;
  const ParticleState triv{0.0, Multivector{}, EvenElement::identity(), m * g0};
  const FrenetFrame ft = frenet_frame(triv, free);
  CHECK(ft.K.K1 == 0.0);
  CHECK(ft.K.K2 == 0.0);
  CHECK(ft.K.K3 == 0.0);

  const Trajectory t = integrate(helix(m, 400, 1.0));
  const FrenetFrame f0 = frenet_frame(t[0].state, free);
  CHECK(f0.K.K1 > 0.0);
  CHECK(f0.K.K2 > 0.0);
  for (std::size_t i = 0; i < t.size(); i += 13) {
    const FrenetFrame f = frenet_frame(t[i].state, free);
    CHECK(f.K.K1 == doctest::Approx(f0.K.K1).epsilon(1e-6));
    CHECK(f.K.K2 == doctest::Approx(f0.K.K2).epsilon(1e-6));
    CHECK(std::fabs(f.K.K3) <= 1e-6 * f0.K.K1);
    const double inv = curvature_invariant(f.omega());
    CHECK(std::fabs(inv - curvature_invariant(f.K)) <= 1e-8 * std::fabs(inv));

    const FrameComparison c = compare_frames(t[i].state, free);
    CHECK(c.tangent_alignment == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("mass relation") {
  const FieldSpec free = FieldSpec::free_field();
  for (double m : {1.0, 2.0}) {
    const ParticleState triv{0.0, Multivector{}, EvenElement::identity(), m * g0};
    const MassRelation r = mass_relation(triv, free);
    CHECK(r.pv == doctest::Approx(m).epsilon(1e-15));
    CHECK(r.omega_dot_s == doctest::Approx(m).epsilon(1e-15));
    CHECK(r.omega_dot_s_density == doctest::Approx(m).epsilon(1e-15));
  }

  // Helix with H = m: the density-weighted spin gives m, the unit-rotor spin
  // gives H / rho = m cosh(alpha).
  const double alpha = 0.5;
  const Trajectory t = integrate(helix(1.5, 400, 1.0, alpha));
  for (std::size_t i = 0; i < t.size(); i += 50) {
    const MassRelation r = mass_relation(t[i].state, free);
    CHECK(std::fabs(r.pv - 1.5) <= 1e-9 * 1.5);
    CHECK(std::fabs(r.omega_dot_s_density - 1.5) <= 1e-9 * 1.5);
    CHECK(r.omega_dot_s == doctest::Approx(1.5 * std::cosh(alpha)).epsilon(1e-9));
  }
}
