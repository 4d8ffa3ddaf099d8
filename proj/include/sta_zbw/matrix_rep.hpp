#pragma once

#include <array>
#include <complex>

#include "sta_zbw/even.hpp"
#include "sta_zbw/multivector.hpp"

namespace sta {

using Complex = std::complex<double>;

/// 4x4 complex matrix, row-major.
class Mat4c {
 public:
  Mat4c() = default;
  static Mat4c identity();

  Complex operator()(int r, int c) const { return a_[static_cast<std::size_t>(4 * r + c)]; }
  Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(4 * r + c)]; }

  Mat4c& operator+=(const Mat4c& o);
  Mat4c& operator-=(const Mat4c& o);
  Mat4c& operator*=(Complex s);
  friend Mat4c operator+(Mat4c a, const Mat4c& b) { return a += b; }
  friend Mat4c operator-(Mat4c a, const Mat4c& b) { return a -= b; }
  friend Mat4c operator*(Mat4c a, Complex s) { return a *= s; }
  friend Mat4c operator*(Complex s, Mat4c a) { return a *= s; }
  friend Mat4c operator*(const Mat4c& a, const Mat4c& b);

  Mat4c adjoint() const;
  Complex trace() const;
  double max_abs() const;

 private:
  std::array<Complex, 16> a_{};
};

/// Bar-Zanghi spinor column z (4 complex components).
using DiracColumn = std::array<Complex, 4>;

DiracColumn operator*(const Mat4c& m, const DiracColumn& z);
double max_abs(const DiracColumn& z);

/// Dirac-representation matrices: gamma_0 = diag(1, -1) blocks,
/// gamma_i = [[0, -sigma_i], [sigma_i, 0]]. Throws std::out_of_range for mu outside 0..3.
Mat4c gamma_matrix(int mu);

/// Algebra homomorphism Cl(1,3) -> M_4(C), blade -> ordered product of gamma matrices.
Mat4c mv_to_matrix(const Multivector& a);

/// Inverse of mv_to_matrix on its image, by trace projection
/// c_b = Re tr(M M(blade_b)^{-1}) / 4.
Multivector matrix_to_mv(const Mat4c& m);

/// First column of mv_to_matrix(psi); equals the column of psi * (1 + gamma_0)/2.
DiracColumn spinor_to_column(const EvenElement& psi);

/// Rebuilds psi from its column through the full Dirac-Hestenes matrix pattern
/// (see dh_matrix_pattern) and trace projection.
EvenElement column_to_spinor(const DiracColumn& z);

/// The 4x4 matrix of an even element written in terms of its first column:
///   [ z1  -z2* z3   z4* ]
///   [ z2   z1* z4  -z3* ]
///   [ z3   z4* z1  -z2* ]
///   [ z4  -z3* z2   z1* ]
Mat4c dh_matrix_pattern(const DiracColumn& z);

/// Matrix of ~psi in terms of psi's column. Row 3, column 4 is +z2*.
Mat4c dh_reverse_pattern(const DiracColumn& z);

/// zbar = z^dagger gamma_0, as a row.
DiracColumn bar(const DiracColumn& z);

/// zbar M z.
Complex bilinear(const DiracColumn& z, const Mat4c& m);

/// Contravariant velocity components v^mu = zbar gamma^mu z.
std::array<double, 4> bz_velocity(const DiracColumn& z);

/// S_{mu nu} = (i/4) zbar [gamma_mu, gamma_nu] z, lower indices, real part.
using Tensor2 = std::array<std::array<double, 4>, 4>;
Tensor2 bz_spin_tensor(const DiracColumn& z);

/// Largest |Im| encountered while evaluating bz_spin_tensor (reality check).
double bz_spin_tensor_imag(const DiracColumn& z);

/// Free Barut-Zanghi evolution z(tau) = [cos(m tau) - i gamma^mu p_mu / m sin(m tau)] z(0).
/// `p` is a vector multivector. Throws sta::Error unless m > 0 and |p^2 - m^2| <= 1e-9 m^2.
DiracColumn bz_analytic_evolution(const DiracColumn& z0, const Multivector& p, double m, double tau);

/// Same evolution expressed on Dirac-Hestenes spinors (through the column map).
EvenElement bz_analytic_spinor(const EvenElement& psi0, const Multivector& p, double m, double tau);

}  // namespace sta
