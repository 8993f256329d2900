#include "doctest.h"

#include <random>

#include "icosian/qgroups.hpp"
#include "icosian/quaternion.hpp"
#include "oracles.hpp"

using namespace icosian;

namespace {
const FieldElement tau = FieldElement::tau();
const FieldElement sigma = FieldElement::sigma();
const Quaternion one = Quaternion::one();
const Quaternion e1 = Quaternion::unit(1), e2 = Quaternion::unit(2),
                 e3 = Quaternion::unit(3);

bool plus_or_minus(const Quaternion &a, const Quaternion &b) {
  return a == b || a == -b;
}
} // namespace

TEST_CASE("quaternion: Hamilton product on units") {
  CHECK(qmul(e1, e2) == e3);
  CHECK(qmul(e2, e3) == e1);
  CHECK(qmul(e3, e1) == e2);
  CHECK(qmul(e2, e1) == -e3);
  CHECK(qmul(e1, e1) == -one);
  const Quaternion p = canonical_p();
  CHECK(qmul(p, qconj(p)) == one);
}

TEST_CASE("quaternion: conjugate") {
  CHECK(qconj(e1) == -e1);
  CHECK(qconj(one) == one);
  CHECK(qconj(half(1, -1, -1, -1)) == half(1, 1, 1, 1));
}

TEST_CASE("quaternion: scalar products") {
  CHECK(scalar_product(one, e1).is_zero());
  const Quaternion p = canonical_p();
  const Quaternion q1 = half(-sigma, tau, 0, -1);
  CHECK(scalar_product(q1, p) == Rational(1, 2) * tau);
  CHECK(norm2(p) == FieldElement(1));
  CHECK(euclid_scalar_product(sigma * one, sigma * one) == Rational(1));
  CHECK(euclid_scalar_product(one, one) == Rational(1));
}

TEST_CASE("quaternion: golden conjugation") {
  const Quaternion p = canonical_p();
  CHECK(qgalois(p) == half(sigma, 1, 0, tau));
  CHECK(qgalois(e2) == e2);
  CHECK(norm2(qgalois(p)) == FieldElement(1));
}

TEST_CASE("quaternion: power relations of the fifth-root seed") {
  const Quaternion p = canonical_p();
  const Quaternion pb = qconj(p);
  CHECK(plus_or_minus(qpow(p, 5), one));
  CHECK(plus_or_minus(pb, qpow(p, 4)));
  CHECK(plus_or_minus(qpow(pb, 2), qpow(p, 3)));
  CHECK(plus_or_minus(qpow(pb, 3), qpow(p, 2)));
  CHECK(plus_or_minus(qpow(pb, 4), p));
}

TEST_CASE("quaternion: randomized algebra") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Quaternion p = oracle::random_quaternion(rng);
    Quaternion q = oracle::random_quaternion(rng);
    Quaternion r = oracle::random_quaternion(rng);
    CHECK(qmul(qmul(p, q), r) == qmul(p, qmul(q, r)));
    CHECK(norm2(qmul(p, q)) == norm2(p) * norm2(q));
    CHECK(qconj(qmul(p, q)) == qmul(qconj(q), qconj(p)));
    Quaternion sym = qmul(qconj(p), q) + qmul(qconj(q), p);
    CHECK(Rational(1, 2) * sym[0] == scalar_product(p, q));
    CHECK(sym[1].is_zero());
    CHECK(qgalois(qmul(p, q)) == qmul(qgalois(p), qgalois(q)));
    CHECK(sign(norm2(p)) == (p.is_zero() ? 0 : 1));
  }
}

TEST_CASE("quaternion: linear solve and rank") {
  std::vector<Quaternion> rows = {one, e1, half(1, 1, 1, 1), e3};
  std::vector<FieldElement> rhs = {1, 2, 3, 4};
  auto x = solve_scalar_products(rows, rhs);
  REQUIRE(x.has_value());
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(scalar_product(rows[i], *x) == rhs[i]);
  rows[2] = one + e1;
  CHECK_FALSE(solve_scalar_products(rows, rhs).has_value());
  CHECK(rank(rows) == 3);
}

TEST_CASE("quaternion: rays") {
  const Quaternion p = canonical_p();
  CHECK(projectively_equal(p, (tau * tau) * p));
  CHECK_FALSE(projectively_equal(p, -p));
  CHECK_FALSE(projectively_equal(p, sigma * p));
}
