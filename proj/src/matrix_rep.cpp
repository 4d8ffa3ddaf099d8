#include "sta_zbw/matrix_rep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sta {

namespace {

constexpr Complex kI{0.0, 1.0};

Mat4c build_gamma(int mu) {
  // Pauli matrices, standard convention.
  const Complex sigma[3][2][2] = {
      {{0.0, 1.0}, {1.0, 0.0}},
      {{0.0, -kI}, {kI, 0.0}},
      {{1.0, 0.0}, {0.0, -1.0}},
  };
  Mat4c g;
  if (mu == 0) {
    g(0, 0) = g(1, 1) = 1.0;
    g(2, 2) = g(3, 3) = -1.0;
    return g;
  }
  const auto& s = sigma[mu - 1];
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      g(r, c + 2) = -s[r][c];
      g(r + 2, c) = s[r][c];
    }
  return g;
}

const std::array<Mat4c, 16>& blade_matrices() {
  static const std::array<Mat4c, 16> table = [] {
    std::array<Mat4c, 16> t;
    for (unsigned b = 0; b < 16; ++b) {
      Mat4c m = Mat4c::identity();
      for (int i = 0; i < 4; ++i)
        if (b & (1u << i)) m = m * build_gamma(i);
      t[b] = m;
    }
    return t;
  }();
  return table;
}

}  // namespace

Mat4c Mat4c::identity() {
  Mat4c m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat4c& Mat4c::operator+=(const Mat4c& o) {
  for (std::size_t i = 0; i < 16; ++i) a_[i] += o.a_[i];
  return *this;
}
Mat4c& Mat4c::operator-=(const Mat4c& o) {
  for (std::size_t i = 0; i < 16; ++i) a_[i] -= o.a_[i];
  return *this;
}
Mat4c& Mat4c::operator*=(Complex s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Mat4c operator*(const Mat4c& a, const Mat4c& b) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Mat4c Mat4c::adjoint() const {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

Complex Mat4c::trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3); }

double Mat4c::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::fmax(m, std::abs(x));
  return m;
}

DiracColumn operator*(const Mat4c& m, const DiracColumn& z) {
  DiracColumn r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[static_cast<std::size_t>(i)] += m(i, j) * z[static_cast<std::size_t>(j)];
  return r;
}

double max_abs(const DiracColumn& z) {
  double m = 0.0;
  for (const auto& x : z) m = std::fmax(m, std::abs(x));
  return m;
}

Mat4c gamma_matrix(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("gamma_matrix: index must be in 0..3, got " + std::to_string(mu));
  return blade_matrices()[1u << mu];
}

Mat4c mv_to_matrix(const Multivector& a) {
  const auto& table = blade_matrices();
  Mat4c m;
  for (unsigned b = 0; b < 16; ++b)
    if (a[b] != 0.0) m += table[b] * Complex(a[b], 0.0);
  return m;
}

Multivector matrix_to_mv(const Mat4c& m) {
  const auto& table = blade_matrices();
  Multivector a;
  for (unsigned b = 0; b < 16; ++b) {
    // blade^{-1} = blade / blade^2 and blade^2 = +-1.
    const double inv_sign = blade_product_sign(b, b);
    a[b] = 0.25 * inv_sign * (m * table[b]).trace().real();
  }
  return a;
}

DiracColumn spinor_to_column(const EvenElement& psi) {
  const Mat4c m = mv_to_matrix(psi.mv());
  return {m(0, 0), m(1, 0), m(2, 0), m(3, 0)};
}

Mat4c dh_matrix_pattern(const DiracColumn& z) {
  const auto c = [&](int i) { return std::conj(z[static_cast<std::size_t>(i)]); };
  const auto& [z1, z2, z3, z4] = z;
  Mat4c m;
  const Complex rows[4][4] = {
      {z1, -c(1), z3, c(3)},
      {z2, c(0), z4, -c(2)},
      {z3, c(3), z1, -c(1)},
      {z4, -c(2), z2, c(0)},
  };
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col) m(r, col) = rows[r][col];
  return m;
}

Mat4c dh_reverse_pattern(const DiracColumn& z) {
  const auto c = [&](int i) { return std::conj(z[static_cast<std::size_t>(i)]); };
  const auto& [z1, z2, z3, z4] = z;
  Mat4c m;
  const Complex rows[4][4] = {
      {c(0), c(1), -c(2), -c(3)},
      {-z2, z1, -z4, z3},
      {-c(2), -c(3), c(0), c(1)},
      {-z4, z3, -z2, z1},
  };
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col) m(r, col) = rows[r][col];
  return m;
}

EvenElement column_to_spinor(const DiracColumn& z) { return EvenElement::project(matrix_to_mv(dh_matrix_pattern(z))); }

DiracColumn bar(const DiracColumn& z) {
  const Mat4c g0 = gamma_matrix(0);
  DiracColumn r{};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) r[static_cast<std::size_t>(j)] += std::conj(z[static_cast<std::size_t>(i)]) * g0(i, j);
  return r;
}

Complex bilinear(const DiracColumn& z, const Mat4c& m) {
  const DiracColumn zb = bar(z);
  const DiracColumn mz = m * z;
  Complex s{};
  for (std::size_t i = 0; i < 4; ++i) s += zb[i] * mz[i];
  return s;
}

std::array<double, 4> bz_velocity(const DiracColumn& z) {
  std::array<double, 4> v{};
  for (int mu = 0; mu < 4; ++mu)
    v[static_cast<std::size_t>(mu)] = Metric::diag(mu) * bilinear(z, gamma_matrix(mu)).real();
  return v;
}

namespace {
Complex spin_entry(const DiracColumn& z, int mu, int nu) {
  const Mat4c gm = gamma_matrix(mu);
  const Mat4c gn = gamma_matrix(nu);
  return 0.25 * kI * bilinear(z, gm * gn - gn * gm);
}
}  // namespace

Tensor2 bz_spin_tensor(const DiracColumn& z) {
  Tensor2 s{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      s[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = spin_entry(z, mu, nu).real();
  return s;
}

double bz_spin_tensor_imag(const DiracColumn& z) {
  double m = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) m = std::fmax(m, std::fabs(spin_entry(z, mu, nu).imag()));
  return m;
}

DiracColumn bz_analytic_evolution(const DiracColumn& z0, const Multivector& p, double m, double tau) {
  if (!(m > 0.0)) throw Error("bz_analytic_evolution: mass must be positive");
  const double p2 = vector_square(p);
  if (!(std::fabs(p2 - m * m) <= 1e-9 * m * m)) throw Error("bz_analytic_evolution: p is off the mass shell");
  // gamma^mu p_mu = gamma_mu p^mu, i.e. the matrix of the vector p itself.
  const Mat4c pslash = mv_to_matrix(grade_project(p, 1));
  const Mat4c u = Mat4c::identity() * Complex(std::cos(m * tau), 0.0) - pslash * (kI * (std::sin(m * tau) / m));
  return u * z0;
}

EvenElement bz_analytic_spinor(const EvenElement& psi0, const Multivector& p, double m, double tau) {
  return column_to_spinor(bz_analytic_evolution(spinor_to_column(psi0), p, m, tau));
}

}  // namespace sta
