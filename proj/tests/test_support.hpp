#pragma once

#include <random>

#include "sta_zbw/even.hpp"
#include "sta_zbw/multivector.hpp"

namespace sta::testing {

inline Multivector random_mv(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  Multivector m;
  for (unsigned b = 0; b < 16; ++b) m[b] = n(rng);
  return m;
}

inline Multivector random_integer_mv(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(-5, 5);
  Multivector m;
  for (unsigned b = 0; b < 16; ++b) m[b] = u(rng);
  return m;
}

inline Multivector random_grade(std::mt19937_64& rng, int r, double scale = 1.0) {
  return grade_project(random_mv(rng, scale), r);
}

inline EvenElement random_even(std::mt19937_64& rng, double scale = 1.0) {
  return EvenElement::project(random_mv(rng, scale));
}

/// Random bivector with coefficient norm exactly `norm`.
inline Multivector random_bivector(std::mt19937_64& rng, double norm) {
  Multivector b = random_grade(rng, 2);
  return b * (norm / b.coeff_norm());
}

/// Random unit rotor exp(B) with B a random bivector of moderate size.
inline EvenElement random_rotor(std::mt19937_64& rng, double norm = 1.0) {
  return exp_even(EvenElement::project(random_bivector(rng, norm)));
}

inline double max_diff(const Multivector& a, const Multivector& b) { return (a - b).max_abs(); }

}  // namespace sta::testing
