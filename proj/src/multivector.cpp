#include "sta_zbw/multivector.hpp"

#include <stdexcept>

namespace sta {

namespace {

constexpr double reverse_sign(int grade) { return ((grade * (grade - 1) / 2) & 1) ? -1.0 : 1.0; }

// Applies fn(grade_a_part, grade_b_part, target_grade) over grade pairs.
template <class TargetGrade>
Multivector graded_product(const Multivector& a, const Multivector& b, TargetGrade target) {
  Multivector r;
  for (unsigned i = 0; i < Multivector::kSize; ++i) {
    if (a[i] == 0.0) continue;
    const int ga = grade_of(i);
    for (unsigned j = 0; j < Multivector::kSize; ++j) {
      if (b[j] == 0.0) continue;
      const unsigned k = i ^ j;
      if (grade_of(k) != target(ga, grade_of(j))) continue;
      r[k] += blade_product_sign(i, j) * a[i] * b[j];
    }
  }
  return r;
}

}  // namespace

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

Multivector reverse(const Multivector& a) {
  Multivector r = a;
  for (unsigned b = 0; b < Multivector::kSize; ++b) r[b] *= reverse_sign(grade_of(b));
  return r;
}

Multivector grade_involution(const Multivector& a) {
  Multivector r = a;
  for (unsigned b = 0; b < Multivector::kSize; ++b)
    if (grade_of(b) & 1) r[b] = -r[b];
  return r;
}

Multivector grade_project(const Multivector& a, int r) {
  if (r < 0 || r > 4) throw std::out_of_range("grade_project: grade must be in 0..4, got " + std::to_string(r));
  Multivector out;
  for (unsigned b = 0; b < Multivector::kSize; ++b)
    if (grade_of(b) == r) out[b] = a[b];
  return out;
}

double off_grade_norm(const Multivector& a, int r) { return (a - grade_project(a, r)).coeff_norm(); }

Multivector even_part(const Multivector& a) {
  Multivector out;
  for (unsigned b = 0; b < Multivector::kSize; ++b)
    if ((grade_of(b) & 1) == 0) out[b] = a[b];
  return out;
}

Multivector odd_part(const Multivector& a) { return a - even_part(a); }

Multivector wedge(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int r, int s) { return r + s; });
}

Multivector dot(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int r, int s) { return r > s ? r - s : s - r; });
}

double scalar_product(const Multivector& a, const Multivector& b) {
  // <AB>_0 only pairs each blade with itself.
  double s = 0.0;
  for (unsigned i = 0; i < Multivector::kSize; ++i) s += blade_product_sign(i, i) * a[i] * b[i];
  return s;
}

double vector_square(const Multivector& v) {
  const auto c = v.vector_components();
  return c[0] * c[0] - c[1] * c[1] - c[2] * c[2] - c[3] * c[3];
}

Multivector sandwich(const Multivector& rotor, const Multivector& a) { return rotor * a * reverse(rotor); }

Multivector commutator(const Multivector& a, const Multivector& b) { return 0.5 * (a * b - b * a); }

}  // namespace sta
