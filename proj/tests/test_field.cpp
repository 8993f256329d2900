#include "doctest.h"

#include <random>

#include "icosian/errors.hpp"
#include "icosian/field.hpp"
#include "oracles.hpp"

using namespace icosian;

namespace {
const FieldElement tau = FieldElement::tau();
const FieldElement sigma = FieldElement::sigma();
const FieldElement r2 = FieldElement::sqrt2();
} // namespace

TEST_CASE("field: golden relations") {
  CHECK(tau * sigma == FieldElement(-1));
  CHECK(tau + sigma == FieldElement(1));
  CHECK(tau * tau - (tau + FieldElement(1)) == FieldElement());
  CHECK(sigma * sigma == sigma + FieldElement(1));
  CHECK(r2 * r2 == FieldElement(2));
  CHECK(FieldElement::sqrt5() * FieldElement::sqrt10() == FieldElement(5) * r2);
}

TEST_CASE("field: invert") {
  CHECK(invert(tau) == tau - FieldElement(1));
  CHECK(invert(r2) == Rational(1, 2) * r2);
  CHECK_THROWS_AS(invert(FieldElement()), DivisionByZero);
  FieldElement x{Rational(3), Rational(-1, 2), Rational(2, 3), Rational(5)};
  CHECK(x * invert(x) == FieldElement(1));
}

TEST_CASE("field: golden decomposition and euclidean part") {
  CHECK(golden_decompose(tau) == GoldenPair{1, -1});
  CHECK(golden_decompose(sigma) == GoldenPair{0, 1});
  CHECK_THROWS_AS(golden_decompose(r2), NotInGoldenSubfield);
  CHECK(euclidean_part(tau) == Rational(1));
  CHECK(euclidean_part(FieldElement(Rational(1, 2)) + sigma) == Rational(1, 2));
  CHECK(euclidean_part(sigma * sigma) == Rational(1));
  CHECK_THROWS_AS(euclidean_part(FieldElement::sqrt10()), NotInGoldenSubfield);
}

TEST_CASE("field: galois conjugations") {
  CHECK(galois(sigma, Conjugation::Sqrt5) == tau);
  CHECK(galois(r2, Conjugation::Sqrt5) == r2);
  CHECK(galois(FieldElement::sqrt10(), Conjugation::Sqrt2) ==
        -FieldElement::sqrt10());
}

TEST_CASE("field: sign") {
  CHECK(sign(sigma) == -1);
  CHECK(sign(tau * tau - tau - FieldElement(1)) == 0);
  CHECK(sign(r2 - tau) == -1);
  CHECK(sign(FieldElement::sqrt10() - FieldElement(Rational(316, 100))) == 1);
  // 99 - 70 sqrt2 ~ 0.00505, a near-cancellation.
  CHECK(sign(FieldElement(99) - FieldElement(70) * r2) == 1);
  CHECK(sign(FieldElement(70) * r2 - FieldElement(99)) == -1);
}

TEST_CASE("field: exact square roots") {
  CHECK(sqrt_exact(tau * tau) == tau);
  CHECK(sqrt_exact(sigma * sigma) == -sigma);
  CHECK(sqrt_exact(FieldElement(2)) == r2);
  CHECK(sqrt_exact(Rational(1, 2) * tau * tau) == Rational(1, 2) * tau * r2);
  CHECK(sqrt_exact(FieldElement(Rational(9, 4))) == FieldElement(Rational(3, 2)));
  CHECK_FALSE(sqrt_exact(FieldElement(3)).has_value());
  CHECK_FALSE(sqrt_exact(tau).has_value());
  CHECK_FALSE(sqrt_exact(FieldElement(-4)).has_value());
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    FieldElement x = oracle::random_element(rng);
    auto s = sqrt_exact(x * x);
    REQUIRE(s.has_value());
    CHECK(*s == (sign(x) < 0 ? -x : x));
  }
}

TEST_CASE("field: decimal rendering") {
  CHECK(to_decimal(FieldElement()) == "0");
  CHECK(to_decimal(tau) == "1.6180339887498948");
  CHECK(to_decimal(r2, 5) == "1.4142");
  CHECK(to_decimal(-FieldElement(Rational(1, 2))) == "-0.5");
}

TEST_CASE("field: randomized axioms, automorphisms and sign consistency") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    FieldElement x = oracle::random_element(rng);
    FieldElement y = oracle::random_element(rng);
    FieldElement z = oracle::random_element(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero())
      CHECK(x * invert(x) == FieldElement(1));
    for (auto which : {Conjugation::Sqrt5, Conjugation::Sqrt2}) {
      CHECK(galois(galois(x, which), which) == x);
      CHECK(galois(x * y, which) == galois(x, which) * galois(y, which));
      CHECK(galois(x + y, which) == galois(x, which) + galois(y, which));
    }
    CHECK(galois(galois(x, Conjugation::Sqrt5), Conjugation::Sqrt2) ==
          galois(galois(x, Conjugation::Sqrt2), Conjugation::Sqrt5));
    CHECK(sign(x) == oracle::numeric_sign(x));
    CHECK(sign(-x) == -sign(x));
    CHECK(sign(x * y) == sign(x) * sign(y));
    // golden_decompose inverts (x, y) -> x + sigma y on the golden subfield.
    Rational gx = x.coeff(0), gy = x.coeff(2);
    FieldElement g = FieldElement(gx) + FieldElement(gy) * sigma;
    CHECK(golden_decompose(g) == GoldenPair{gx, gy});
  }
}
