#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spinor (or rotor) whose reverse-norm psi*~psi is numerically zero.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Diagonal Minkowski metric (+,-,-,-).
struct Metric {
  static constexpr std::array<int, 4> eta{+1, -1, -1, -1};
  static constexpr int diag(int mu) { return eta[static_cast<std::size_t>(mu)]; }
};

/// Blade bitmask: bit i set means gamma_i is a factor, factors in increasing order.
using Blade = std::uint8_t;

constexpr int grade_of(unsigned blade) { return std::popcount(blade); }

/// Sign of the product of two canonical basis blades in Cl(1,3).
/// Transposition parity times the metric signature of the shared factors.
constexpr int blade_product_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  int sign = (swaps & 1) ? -1 : 1;
  const unsigned common = a & b;
  for (int i = 1; i < 4; ++i)
    if (common & (1u << i)) sign = -sign;
  return sign;
}

/// Dense element of the real Clifford algebra Cl(1,3).
///
/// Coefficients are indexed by blade bitmask (0..15). Arithmetic is plain
/// value semantics; nothing here allocates.
class Multivector {
 public:
  static constexpr std::size_t kSize = 16;
  using Coeffs = std::array<double, kSize>;

  constexpr Multivector() = default;
  constexpr explicit Multivector(const Coeffs& c) : c_(c) {}

  static constexpr Multivector scalar(double s) {
    Multivector m;
    m.c_[0] = s;
    return m;
  }
  static constexpr Multivector blade(unsigned b, double coef = 1.0) {
    Multivector m;
    m.c_[b & 15u] = coef;
    return m;
  }
  /// Basis vector gamma_mu (lower index).
  static constexpr Multivector gamma(int mu) { return blade(1u << mu); }
  /// Reciprocal basis vector gamma^mu = eta^{mu mu} gamma_mu.
  static constexpr Multivector gamma_up(int mu) { return blade(1u << mu, Metric::diag(mu)); }
  /// Vector with contravariant components a^mu, i.e. a^mu gamma_mu.
  static constexpr Multivector vector(double a0, double a1, double a2, double a3) {
    Multivector m;
    m.c_[1] = a0;
    m.c_[2] = a1;
    m.c_[4] = a2;
    m.c_[8] = a3;
    return m;
  }
  static constexpr Multivector vector(const std::array<double, 4>& a) {
    return vector(a[0], a[1], a[2], a[3]);
  }
  /// Unit pseudoscalar gamma_5 = gamma_0 gamma_1 gamma_2 gamma_3.
  static constexpr Multivector pseudoscalar(double coef = 1.0) { return blade(15u, coef); }

  constexpr double operator[](std::size_t b) const { return c_[b]; }
  constexpr double& operator[](std::size_t b) { return c_[b]; }
  constexpr const Coeffs& coeffs() const { return c_; }

  /// Contravariant component a^mu of the grade-1 part.
  constexpr double component(int mu) const { return c_[1u << mu]; }
  constexpr std::array<double, 4> vector_components() const {
    return {c_[1], c_[2], c_[4], c_[8]};
  }
  constexpr double scalar_part() const { return c_[0]; }
  constexpr double pseudoscalar_part() const { return c_[15]; }

  constexpr Multivector& operator+=(const Multivector& o) {
    for (std::size_t i = 0; i < kSize; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr Multivector& operator-=(const Multivector& o) {
    for (std::size_t i = 0; i < kSize; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr Multivector& operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  constexpr Multivector& operator/=(double s) {
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend constexpr Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend constexpr Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend constexpr Multivector operator-(Multivector a) { return a *= -1.0; }
  friend constexpr Multivector operator*(Multivector a, double s) { return a *= s; }
  friend constexpr Multivector operator*(double s, Multivector a) { return a *= s; }
  friend constexpr Multivector operator/(Multivector a, double s) { return a /= s; }

  /// Geometric product.
  friend constexpr Multivector operator*(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (unsigned i = 0; i < kSize; ++i) {
      if (a.c_[i] == 0.0) continue;
      for (unsigned j = 0; j < kSize; ++j) {
        if (b.c_[j] == 0.0) continue;
        r.c_[i ^ j] += blade_product_sign(i, j) * a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  friend constexpr bool operator==(const Multivector&, const Multivector&) = default;

  /// Euclidean norm of the coefficient array (used for residuals and tolerances).
  double coeff_norm() const {
    double s = 0.0;
    for (double x : c_) s += x * x;
    return std::sqrt(s);
  }
  double max_abs() const {
    double m = 0.0;
    for (double x : c_) m = std::fmax(m, std::fabs(x));
    return m;
  }
  bool is_finite() const {
    for (double x : c_)
      if (!std::isfinite(x)) return false;
    return true;
  }

 private:
  Coeffs c_{};
};

Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Reversion: sign (-1)^{r(r-1)/2} on each grade-r blade.
Multivector reverse(const Multivector& a);

/// Grade involution: sign (-1)^r.
Multivector grade_involution(const Multivector& a);

/// <A>_r. Throws std::out_of_range unless 0 <= r <= 4.
Multivector grade_project(const Multivector& a, int r);

/// Norm of everything outside grade r (used for "is this an r-vector" checks).
double off_grade_norm(const Multivector& a, int r);

/// Even part (grades 0, 2, 4).
Multivector even_part(const Multivector& a);
Multivector odd_part(const Multivector& a);

/// Outer product, extended bilinearly: <A_r B_s>_{r+s} over all grade pairs.
Multivector wedge(const Multivector& a, const Multivector& b);

/// Inner product, extended bilinearly: <A_r B_s>_{|r-s|} over all grade pairs.
Multivector dot(const Multivector& a, const Multivector& b);

/// Scalar part of the geometric product, <AB>_0.
double scalar_product(const Multivector& a, const Multivector& b);

/// Minkowski square of the grade-1 part.
double vector_square(const Multivector& v);

/// Sandwich (versor action) R a ~R.
Multivector sandwich(const Multivector& rotor, const Multivector& a);

/// Commutator product (AB - BA)/2.
Multivector commutator(const Multivector& a, const Multivector& b);

}  // namespace sta
