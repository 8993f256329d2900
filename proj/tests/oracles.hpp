#pragma once

// Test-only oracles. Nothing here calls back into the code paths it checks.

#include <mpfr.h>

#include <random>

#include "icosian/field.hpp"
#include "icosian/quaternion.hpp"

namespace oracle {

/// Sign of a field element by 512-bit floating evaluation. Valid when the
/// value is either exactly zero or not absurdly close to it, which holds for
/// the small random coefficients used in tests.
inline int numeric_sign(const icosian::FieldElement &x) {
  if (x.is_zero())
    return 0;
  mpfr_t acc, term, root;
  mpfr_inits2(512, acc, term, root, (mpfr_ptr)nullptr);
  mpfr_set_ui(acc, 0, MPFR_RNDN);
  const unsigned long radicand[4] = {1, 2, 5, 10};
  for (std::size_t i = 0; i < 4; ++i) {
    mpq_class q = x.coeff(i).to_mpq();
    mpfr_set_q(term, q.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt_ui(root, radicand[i], MPFR_RNDN);
    mpfr_mul(term, term, root, MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  int s = mpfr_sgn(acc);
  mpfr_clears(acc, term, root, (mpfr_ptr)nullptr);
  return s;
}

inline double numeric_value(const icosian::FieldElement &x) {
  double v = 0;
  const double r[4] = {1.0, 1.4142135623730951, 2.23606797749979,
                       3.1622776601683795};
  for (std::size_t i = 0; i < 4; ++i)
    v += x.coeff(i).to_mpq().get_d() * r[i];
  return v;
}

inline icosian::FieldElement random_element(std::mt19937_64 &rng,
                                            int range = 9, int den = 6) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> d(1, den);
  auto r = [&] { return icosian::Rational(num(rng), d(rng)); };
  return {r(), r(), r(), r()};
}

inline icosian::Quaternion random_quaternion(std::mt19937_64 &rng) {
  return {random_element(rng, 4, 3), random_element(rng, 4, 3),
          random_element(rng, 4, 3), random_element(rng, 4, 3)};
}

} // namespace oracle
