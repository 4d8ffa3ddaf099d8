#include "sta_zbw/even.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace sta {

EvenElement::EvenElement(const Multivector& a, double tol) {
  const double odd = odd_part(a).coeff_norm();
  if (odd > tol * std::fmax(1.0, a.coeff_norm()))
    throw Error("EvenElement: odd-grade contamination " + std::to_string(odd));
  m_ = even_part(a);
}

EvenElement EvenElement::project(const Multivector& a) {
  EvenElement e;
  e.m_ = even_part(a);
  return e;
}

ReverseNorm reverse_norm(const EvenElement& psi) {
  const Multivector n = psi.mv() * reverse(psi.mv());
  return {n.scalar_part(), n.pseudoscalar_part()};
}

EvenElement exp_even_series(const EvenElement& b) {
  constexpr int kMaxTerms = 60;
  constexpr int kMaxSquarings = 1100;
  double norm = b.mv().coeff_norm();
  if (!std::isfinite(norm)) throw Error("exp_even: non-finite argument");

  int squarings = 0;
  Multivector x = b.mv();
  while (norm > 0.5) {
    x *= 0.5;
    norm *= 0.5;
    if (++squarings > kMaxSquarings) throw Error("exp_even: argument magnitude out of range");
  }

  Multivector sum = Multivector::scalar(1.0);
  Multivector term = sum;
  bool converged = false;
  for (int n = 1; n <= kMaxTerms; ++n) {
    term = term * x / static_cast<double>(n);
    sum += term;
    if (term.coeff_norm() <= 1e-15 * sum.coeff_norm()) {
      converged = true;
      break;
    }
  }
  if (!converged) throw Error("exp_even: series did not converge");

  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  if (!sum.is_finite()) throw Error("exp_even: overflow during squaring");
  return EvenElement::project(sum);
}

EvenElement exp_even(const EvenElement& b) {
  // Scalars and the pseudoscalar commute with every even element, so they
  // factor out of the exponential exactly.
  const double s = b.mv().scalar_part();
  const double q = b.mv().pseudoscalar_part();
  const Multivector biv = grade_project(b.mv(), 2);

  // Every bivector squares to alpha + beta gamma5, and gamma5 behaves as the
  // imaginary unit on that centre: exp(B) = cosh(w) + B sinh(w)/w, w^2 = B^2.
  const Multivector sq = biv * biv;
  const double alpha = sq.scalar_part();
  const double beta = sq.pseudoscalar_part();
  const double scale = std::fmax(std::fabs(alpha), 1e-300);

  std::complex<double> ch;
  std::complex<double> shc;  // sinh(w)/w
  if (std::fabs(beta) <= 1e-14 * scale) {
    // Simple bivector: real closed forms.
    const double theta = std::sqrt(std::fabs(alpha));
    if (theta < 1e-8) {
      ch = 1.0 + 0.5 * alpha;
      shc = 1.0 + alpha / 6.0;
    } else if (alpha < 0.0) {
      ch = std::cos(theta);
      shc = std::sin(theta) / theta;
    } else {
      ch = std::cosh(theta);
      shc = std::sinh(theta) / theta;
    }
  } else {
    const std::complex<double> z(alpha, beta);
    const std::complex<double> w = std::sqrt(z);
    ch = std::cosh(w);
    shc = std::abs(w) < 1e-8 ? 1.0 + z / 6.0 : std::sinh(w) / w;
  }
  if (!std::isfinite(ch.real()) || !std::isfinite(ch.imag()) || !std::isfinite(shc.real()) ||
      !std::isfinite(shc.imag()))
    throw Error("exp_even: argument magnitude out of range");

  const Multivector central_ch = Multivector::scalar(ch.real()) + Multivector::pseudoscalar(ch.imag());
  const Multivector central_sh = Multivector::scalar(shc.real()) + Multivector::pseudoscalar(shc.imag());
  const EvenElement eb = EvenElement::project(central_ch + central_sh * biv);

  const EvenElement factor = duality_factor(2.0 * q) * std::exp(s);
  return factor * eb;
}

Multivector log_rotor(const EvenElement& r) {
  const ReverseNorm n = reverse_norm(r);
  if (std::fabs(n.s - 1.0) > 1e-10 || std::fabs(n.p) > 1e-10) throw Error("log_rotor: argument is not a rotor");
  const Multivector biv = grade_project(r.mv(), 2);
  const std::complex<double> c(r.mv().scalar_part(), r.mv().pseudoscalar_part());
  const std::complex<double> w = std::acosh(c);
  std::complex<double> factor = 1.0;  // w / sinh(w)
  if (std::abs(w) > 1e-8) {
    const std::complex<double> sh = std::sinh(w);
    if (std::abs(sh) < 1e-12) {
      if (biv.coeff_norm() > 1e-12) throw Error("log_rotor: inconsistent rotor");
      throw DegenerateError("log_rotor: rotation by 2 pi has no unique bivector");
    }
    factor = w / sh;
  }
  const Multivector central = Multivector::scalar(factor.real()) + Multivector::pseudoscalar(factor.imag());
  return grade_project(central * biv, 2);
}

EvenElement invert(const EvenElement& psi) {
  const ReverseNorm n = reverse_norm(psi);
  const double det = n.s * n.s + n.p * n.p;
  const double scale = psi.mv().coeff_norm();
  if (!(std::sqrt(det) > 1e-12 * scale * scale))
    throw DegenerateError("invert: psi ~psi vanishes (light-like spinor)");
  Multivector conj = Multivector::scalar(n.s) - Multivector::pseudoscalar(n.p);
  return EvenElement::project(reverse(psi.mv()) * conj / det);
}

EvenElement duality_factor(double beta) {
  Multivector m = Multivector::scalar(std::cos(0.5 * beta)) + Multivector::pseudoscalar(std::sin(0.5 * beta));
  return EvenElement::project(m);
}

SpinorDecomposition decompose(const EvenElement& psi) {
  const ReverseNorm n = reverse_norm(psi);
  const double rho = n.magnitude();
  const double scale = psi.mv().coeff_norm();
  if (!(rho > 1e-12 * scale * scale)) throw DegenerateError("decompose: psi ~psi vanishes (light-like spinor)");
  SpinorDecomposition d;
  d.rho = rho;
  d.beta = std::atan2(n.p, n.s);
  d.rotor = duality_factor(-d.beta) * psi / std::sqrt(rho);
  return d;
}

EvenElement rotor_of(const EvenElement& psi) { return decompose(psi).rotor; }

Multivector sandwich(const EvenElement& r, const Multivector& a) { return r.mv() * a * reverse(r.mv()); }

}  // namespace sta
