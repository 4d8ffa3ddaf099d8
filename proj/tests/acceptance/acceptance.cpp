// Acceptance criteria 1-10 at fixed tolerances. STA_ZBW_TOL_SCALE is ignored here.
// Usage: acceptance [N]   (no argument runs all ten)

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "sta_zbw/dirac.hpp"
#include "sta_zbw/frenet.hpp"
#include "sta_zbw/io.hpp"
#include "sta_zbw/matrix_rep.hpp"
#include "sta_zbw/oracle.hpp"

using namespace sta;

namespace {

const Multivector g0 = Multivector::gamma(0);
const Multivector g1 = Multivector::gamma(1);
const Multivector g2 = Multivector::gamma(2);
const Multivector g3 = Multivector::gamma(3);
const FieldSpec kFree = FieldSpec::free_field();

struct Line {
  std::string what;
  double measured;
  double bound;
  bool is_min;
  bool ok;
};

struct Outcome {
  std::vector<Line> lines;

  void upper(const std::string& what, double measured, double tol) {
    lines.push_back({what, measured, tol, false, measured <= tol});
  }
  void lower(const std::string& what, double measured, double min) {
    lines.push_back({what, measured, min, true, measured >= min});
  }
  bool ok() const {
    for (const Line& l : lines)
      if (!l.ok) return false;
    return true;
  }
};

double diff(const Multivector& a, const Multivector& b) { return (a - b).max_abs(); }

Multivector random_mv(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Multivector m;
  for (unsigned b = 0; b < 16; ++b) m[b] = n(rng);
  return m;
}

SimConfig helix(double m, int spp, double periods, double alpha = 0.5) {
  SimConfig c;
  c.mass = m;
  c.p0 = m * g0;
  c.psi0 = exp_even(EvenElement(g1 * g0 * (alpha / 2)));
  c.steps_per_period = spp;
  c.periods = periods;
  return c;
}

// m = 1, rest-frame momentum, generic spinor: rotor and boost parts from seed 42.
SimConfig generic_free(int spp, double periods) {
  std::mt19937_64 rng(42);
  SimConfig c;
  c.mass = 1.0;
  c.p0 = g0;
  const Multivector b = grade_project(random_mv(rng), 2);
  c.psi0 = exp_even(EvenElement(b * (0.6 / b.coeff_norm()))) * exp_even(EvenElement(g1 * g0 * 0.25));
  c.x0 = g3 * 0.5;
  c.steps_per_period = spp;
  c.periods = periods;
  return c;
}

double tensor_diff(const Tensor2& a, const Tensor2& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::fmax(d, std::fabs(a[i][j] - b[i][j]));
  return d;
}

Outcome algebra_axioms() {
  Outcome o;
  double anti = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Multivector a = Multivector::gamma(mu), b = Multivector::gamma(nu);
      const double eta = mu == nu ? Metric::diag(mu) : 0.0;
      anti = std::fmax(anti, diff(a * b + b * a, Multivector::scalar(2.0 * eta)));
    }
  o.upper("16 anticommutators {g_mu, g_nu} - 2 eta (exact)", anti, 0.0);

  std::mt19937_64 rng(42);
  double hom = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Multivector a = random_mv(rng), b = random_mv(rng);
    hom = std::fmax(hom, (mv_to_matrix(a * b) - mv_to_matrix(a) * mv_to_matrix(b)).max_abs());
  }
  o.upper("matrix homomorphism, 1000 random pairs", hom, 1e-12);
  return o;
}

Outcome conservation() {
  Outcome o;
  const SimConfig c = generic_free(1000, 10.0);
  const Trajectory t = integrate(c);
  const Tensor2 j0 = total_angular_momentum(t[0].state);
  double h = 0.0, p2 = 0.0, j = 0.0;
  for (const auto& s : t.samples()) {
    h = std::fmax(h, std::fabs(s.H - c.mass));
    p2 = std::fmax(p2, std::fabs(vector_square(s.state.p) - c.mass * c.mass));
    j = std::fmax(j, tensor_diff(total_angular_momentum(s.state), j0));
  }
  o.upper("|H - m|, m = 1, 1000 steps/period, 10 periods", h, 1e-9);
  o.upper("|p^2 - m^2| (exact)", p2, 0.0);
  o.upper("J_{mu nu} drift", j, 1e-8);
  return o;
}

Outcome zbw_frequency_check() {
  Outcome o;
  for (double m : {0.5, 1.0, 2.5}) {
    const double w = zbw_frequency(integrate(helix(m, 1000, 10.0)));
    char what[64];
    std::snprintf(what, sizeof what, "|omega / 2m - 1|, m = %g", m);
    o.upper(what, std::fabs(w / (2.0 * m) - 1.0), 1e-3);
  }
  return o;
}

Outcome mean_velocity() {
  Outcome o;
  const double m = 1.3, k = 0.35;
  SimConfig c = helix(m, 1000, 1.0);
  c.p0 = Multivector::vector(m * std::cosh(k), m * std::sinh(k), 0.0, 0.0);
  const Multivector avg = zbw_average(integrate(c), 1);
  o.upper("max component |<v>_zbw - p/m|, boosted p, one period", diff(avg, c.p0 / m), 1e-6);
  return o;
}

Outcome oracle() {
  Outcome o;
  const SimConfig c = generic_free(1000, 10.0);
  o.upper("max |psi - psi_analytic|, 1000 steps/period, 10 periods", oracle_max_error(c), 1e-8);
  const OracleResult r = run_oracle(c);
  o.lower("RK4 error ratio, 1000 vs 2000 steps/period", r.ratio, 12.0);
  o.upper("RK4 error ratio, 1000 vs 2000 steps/period", r.ratio, 20.0);
  return o;
}

Outcome mass_relation_check() {
  Outcome o;
  const ParticleState triv{0.0, Multivector{}, EvenElement::identity(), g0};
  const MassRelation tr = mass_relation(triv, kFree);
  o.upper("trivial: |p.v - m| / m", std::fabs(tr.pv - 1.0), 1e-9);
  o.upper("trivial: |Omega.S - m| / m", std::fabs(tr.omega_dot_s - 1.0), 1e-9);

  double pv = 0.0, ws = 0.0;
  for (double m : {1.0, 2.0}) {
    const Trajectory t = integrate(helix(m, 400, 1.0));
    for (std::size_t i = 0; i < t.size(); i += 10) {
      const MassRelation r = mass_relation(t[i].state, kFree);
      pv = std::fmax(pv, std::fabs(r.pv - m) / m);
      ws = std::fmax(ws, std::fabs(r.omega_dot_s - m) / m);
    }
  }
  o.upper("helix: |p.v - m| / m", pv, 1e-9);
  o.upper("helix: |Omega.S - m| / m, S = (1/2) R g2 g1 ~R", ws, 1e-9);
  return o;
}

Outcome darboux() {
  Outcome o;
  double res = 0.0, wd = 0.0, inv = 0.0;
  for (double m : {1.0, 2.0})
    for (double alpha : {0.5, 1.0}) {
      const Trajectory t = integrate(helix(m, 400, 1.0, alpha));
      for (std::size_t i = 0; i < t.size(); i += 10) {
        const ParticleState& s = t[i].state;
        const Tetrad e = rotor_tetrad(s.psi);
        const VectorSet ed = tetrad_derivative(s, kFree);
        const Multivector w20 = darboux_bivector(ed, e);
        res = std::fmax(res, darboux_residual(ed, e, w20));
        wd = std::fmax(wd, diff(w20, rotor_omega(s, kFree)));
        const FrenetFrame f = frenet_frame(s, kFree);
        const double ww = curvature_invariant(f.omega());
        inv = std::fmax(inv, std::fabs(ww - curvature_invariant(f.K)) / std::fabs(ww));
      }
    }
  o.upper("max |e'_mu - Omega.e_mu|, helix corpus", res, 1e-9);
  o.upper("|Omega(e' ^ e) - 2 R' ~R|", wd, 1e-9);
  o.upper("|Omega.Omega - (K1^2 - K2^2 - K3^2)| relative", inv, 1e-8);
  return o;
}

Outcome frenet_oracle() {
  Outcome o;
  // x(t) = (a t, r cos w t, r sin w t, b t): textbook curvatures
  // K1 = r w^2 / N^2, K2 = w sqrt(a^2 - b^2) / N^2, K3 = 0, N^2 = a^2 - r^2 w^2 - b^2.
  struct H {
    double a, r, w, b;
  };
  double err = 0.0;
  for (const H& h : {H{2.0, 0.7, 1.3, 0.4}, H{1.0, 0.2, 2.0, 0.0}, H{3.0, 1.5, 0.9, -1.1}}) {
    const double n2 = h.a * h.a - h.r * h.r * h.w * h.w - h.b * h.b;
    const double k1 = h.r * h.w * h.w / n2, k2 = h.w * std::sqrt(h.a * h.a - h.b * h.b) / n2;
    for (double t : {0.0, 0.37, 1.9, -4.2}) {
      const double c = std::cos(h.w * t), s = std::sin(h.w * t), w = h.w, r = h.r;
      const VectorSet xd = {Multivector::vector(h.a, -r * w * s, r * w * c, h.b),
                            Multivector::vector(0, -r * w * w * c, -r * w * w * s, 0),
                            Multivector::vector(0, r * w * w * w * s, -r * w * w * w * c, 0),
                            Multivector::vector(0, r * w * w * w * w * c, r * w * w * w * w * s, 0)};
      const FrenetFrame f = frenet_frame_from_curve(xd);
      err = std::fmax(err, std::fabs(f.K.K1 - k1) / k1);
      err = std::fmax(err, std::fabs(f.K.K2 - k2) / k2);
      err = std::fmax(err, std::fabs(f.K.K3));
    }
  }
  o.upper("synthetic helices: max relative curvature error", err, 1e-8);
  return o;
}

Outcome dirac_chain() {
  Outcome o;
  std::mt19937_64 rng(42);
  std::normal_distribution<double> n(0.0, 1.0);
  double r12 = 0.0, r15 = 0.0, r15p = 0.0, r16 = 0.0;
  for (int i = 0; i < 30; ++i) {
    const double m = 0.6 + 0.15 * i;
    const EvenElement psi0 = exp_even(EvenElement((g2 * g3) * n(rng) + (g3 * g1) * n(rng) + (g1 * g2) * n(rng)));
    const Multivector sp = Multivector::vector(0.0, n(rng), n(rng), n(rng));
    const Multivector x = sp + g0 * (sp.coeff_norm() + std::fabs(n(rng)) + 0.1);
    const ParticleState s = plane_wave_state(psi0, m, x);
    const Derivatives d = plane_wave_derivatives(psi0, m, x);
    r12 = std::fmax(r12, nonlinear_residual(s, d).coeff_norm());
    r15 = std::fmax(r15, free_nonlinear_residual(s, d, m).coeff_norm());
    r15p = std::fmax(r15p, linearized_residual(s, d, m).coeff_norm());
    r16 = std::fmax(r16, std::fmax(streamline_dh_residual(s, d, m).coeff_norm(),
                                   dh_residual_planewave(psi0, m, x).coeff_norm()));
  }
  o.upper("plane waves: nl12 residual", r12, 1e-10);
  o.upper("plane waves: nl15 residual", r15, 1e-10);
  o.upper("plane waves: lin15p residual", r15p, 1e-10);
  o.upper("plane waves: dh16 residual", r16, 1e-10);

  const double m = 1.0;
  const EvenElement psi0 = exp_even(EvenElement(g1 * g2 * 0.4 + g2 * g3 * 0.2));
  const Multivector x = Multivector::vector(0.7, 0.1, -0.2, 0.3);
  const ParticleState s = plane_wave_state(psi0, m, x);
  const Derivatives d = plane_wave_derivatives(psi0, m, x);
  std::vector<double> eps, a, b, c, e;
  for (double k = 1e-6; k <= 1.01e-2; k *= 10.0) {
    ParticleState bent = s;
    bent.psi = s.psi + EvenElement(k * g1 * g0 * s.psi.mv());
    eps.push_back(k);
    a.push_back(nonlinear_residual(bent, d).coeff_norm());
    b.push_back(free_nonlinear_residual(bent, d, m).coeff_norm());
    c.push_back(linearized_residual(bent, d, m).coeff_norm());
    e.push_back(streamline_dh_residual(bent, d, m).coeff_norm());
  }
  o.lower("log-log slope in eps, nl12", log_log_slope(eps, a), 0.9);
  o.lower("log-log slope in eps, nl15", log_log_slope(eps, b), 0.9);
  o.lower("log-log slope in eps, lin15p", log_log_slope(eps, c), 0.9);
  o.lower("log-log slope in eps, dh16", log_log_slope(eps, e), 0.9);
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("sta_zbw_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::vector<std::string> bytes;
  for (int run = 0; run < 2; ++run) {
    const auto path = dir / ("trajectory_" + std::to_string(run) + ".csv");
    {
      std::ofstream out(path, std::ios::binary);
      write_csv(out, analyse(integrate(generic_free(200, 3.0))));
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    bytes.push_back(ss.str());
  }
  std::filesystem::remove_all(dir);
  std::size_t differing = bytes[0].size() == bytes[1].size() ? 0 : 1;
  for (std::size_t i = 0; i < std::min(bytes[0].size(), bytes[1].size()); ++i) differing += bytes[0][i] != bytes[1][i];
  o.upper("differing bytes between two trajectory.csv files", static_cast<double>(differing), 0.0);
  o.lower("trajectory.csv size in bytes", static_cast<double>(bytes[0].size()), 1000.0);
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"algebra axioms", algebra_axioms},
      {"free-particle conservation", conservation},
      {"zitterbewegung frequency 2m", zbw_frequency_check},
      {"mean velocity p/m", mean_velocity},
      {"analytic oracle and RK4 order", oracle},
      {"mass relation p.v = Omega.S = m", mass_relation_check},
      {"Darboux geometry", darboux},
      {"Frenet oracle", frenet_oracle},
      {"Dirac chain on plane waves", dirac_chain},
      {"determinism", determinism},
  };

  std::size_t first = 0, last = all.size();
  if (argc > 1) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > static_cast<int>(all.size())) {
      std::fprintf(stderr, "usage: %s [1..%zu]\n", argv[0], all.size());
      return 2;
    }
    first = static_cast<std::size_t>(k - 1);
    last = first + 1;
  }

  int failed = 0;
  for (std::size_t i = first; i < last; ++i) {
    Outcome o;
    std::string error;
    try {
      o = all[i].run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && o.ok();
    std::printf("%s criterion %zu: %s\n", ok ? "PASS" : "FAIL", i + 1, all[i].title);
    for (const Line& l : o.lines)
      std::printf("    %-4s %-58s measured %.3e  %s %.1e\n", l.ok ? "ok" : "MISS", l.what.c_str(), l.measured,
                  l.is_min ? "min" : "tol", l.bound);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
