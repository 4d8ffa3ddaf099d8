#pragma once

#include "sta_zbw/multivector.hpp"

namespace sta {

/// Even-grade element of Cl(1,3): grades 0, 2 and 4 only.
///
/// This is the home of Dirac-Hestenes spinors psi = rho^{1/2} e^{beta gamma5/2} R
/// and of rotors (psi ~psi = 1). The odd coefficients are always exactly zero.
class EvenElement {
 public:
  EvenElement() = default;

  /// Checked conversion. Throws sta::Error if the odd part exceeds
  /// `tol * max(1, |a|)`.
  explicit EvenElement(const Multivector& a, double tol = 1e-10);

  /// Drops any odd part without checking.
  static EvenElement project(const Multivector& a);

  static EvenElement scalar(double s) { return project(Multivector::scalar(s)); }
  static EvenElement identity() { return scalar(1.0); }

  const Multivector& mv() const { return m_; }
  operator const Multivector&() const { return m_; }  // NOLINT(google-explicit-constructor)

  double operator[](std::size_t b) const { return m_[b]; }

  EvenElement& operator+=(const EvenElement& o) {
    m_ += o.m_;
    return *this;
  }
  EvenElement& operator-=(const EvenElement& o) {
    m_ -= o.m_;
    return *this;
  }
  EvenElement& operator*=(double s) {
    m_ *= s;
    return *this;
  }
  friend EvenElement operator+(EvenElement a, const EvenElement& b) { return a += b; }
  friend EvenElement operator-(EvenElement a, const EvenElement& b) { return a -= b; }
  friend EvenElement operator-(EvenElement a) { return a *= -1.0; }
  friend EvenElement operator*(EvenElement a, double s) { return a *= s; }
  friend EvenElement operator*(double s, EvenElement a) { return a *= s; }
  friend EvenElement operator/(EvenElement a, double s) { return a *= 1.0 / s; }
  friend EvenElement operator*(const EvenElement& a, const EvenElement& b) {
    return project(a.m_ * b.m_);
  }
  friend bool operator==(const EvenElement&, const EvenElement&) = default;

  EvenElement reversed() const { return project(reverse(m_)); }

 private:
  Multivector m_;
};

/// psi ~psi = s + p gamma5 for every even psi; returned as the pair (s, p).
struct ReverseNorm {
  double s = 0.0;
  double p = 0.0;
  double magnitude() const { return std::hypot(s, p); }
};
ReverseNorm reverse_norm(const EvenElement& psi);

/// Exponential of an even element. The bivector part uses
/// cosh(w) + B sinh(w)/w with w^2 = B^2 in the centre {1, gamma5}; scalar and
/// pseudoscalar parts factor out. Throws sta::Error on overflow.
EvenElement exp_even(const EvenElement& b);

/// Bivector B with exp(B) = R for a rotor R (R ~R = 1 within 1e-10), on the
/// principal branch. Throws sta::Error if R is not a rotor and
/// DegenerateError for R = -1 type elements where the bivector is ambiguous.
Multivector log_rotor(const EvenElement& r);

/// Series path only; exposed so the closed form can be checked against it.
EvenElement exp_even_series(const EvenElement& b);

/// psi^{-1} = ~psi (s - p gamma5) / (s^2 + p^2).
/// Throws DegenerateError when s^2+p^2 <= (1e-12 |psi|^2)^2.
EvenElement invert(const EvenElement& psi);

/// Polar (Dirac-Hestenes) decomposition psi = rho^{1/2} e^{beta gamma5 / 2} R.
struct SpinorDecomposition {
  double rho = 0.0;
  double beta = 0.0;
  EvenElement rotor;
};
SpinorDecomposition decompose(const EvenElement& psi);

/// Rotor factor R of psi. Throws DegenerateError on light-like psi.
EvenElement rotor_of(const EvenElement& psi);

/// exp(beta gamma5 / 2) as an even element.
EvenElement duality_factor(double beta);

/// Sandwich R a ~R restricted to even versors.
Multivector sandwich(const EvenElement& r, const Multivector& a);

}  // namespace sta
