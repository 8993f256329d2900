#include "doctest.h"

#include <random>

#include "icosian/errors.hpp"
#include "icosian/rational.hpp"

using icosian::Rational;

namespace {

// Mixes small values with ones near the 64-bit boundary so both the inline
// path and the GMP promotion path get exercised.
Rational random_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::int64_t> small(-50, 50);
  std::uniform_int_distribution<std::int64_t> huge(
      -(std::int64_t(1) << 62), std::int64_t(1) << 62);
  auto pick = [&] { return kind(rng) == 0 ? huge(rng) : small(rng); };
  std::int64_t d = 0;
  while (d == 0)
    d = pick();
  return Rational(pick(), d);
}

} // namespace

TEST_CASE("rational: lowest terms and rendering") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(1, 0), icosian::DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("x/2"), icosian::ParseError);
  CHECK_THROWS_AS(Rational().reciprocal(), icosian::DivisionByZero);
}

TEST_CASE("rational: big values survive parse and render") {
  Rational big = Rational::parse("123456789012345678901234567891/2");
  CHECK(big.is_big());
  CHECK(big.str() == "123456789012345678901234567891/2");
  Rational back = big * Rational(2) / Rational::parse("123456789012345678901234567891");
  CHECK(back == Rational(1));
  CHECK_FALSE(back.is_big());
}

TEST_CASE("rational: arithmetic agrees with GMP on random inputs") {
  std::mt19937_64 rng(20241016);
  for (int i = 0; i < 4000; ++i) {
    Rational x = random_rational(rng), y = random_rational(rng);
    mpq_class qx = x.to_mpq(), qy = y.to_mpq();
    CHECK((x + y).to_mpq() == qx + qy);
    CHECK((x - y).to_mpq() == qx - qy);
    CHECK((x * y).to_mpq() == qx * qy);
    if (!y.is_zero())
      CHECK((x / y).to_mpq() == qx / qy);
    CHECK(((x <=> y) < 0) == (qx < qy));
    CHECK((x == y) == (qx == qy));
    Rational round = Rational::from_mpq((x * y).to_mpq());
    CHECK(round == x * y);
    CHECK(round.hash() == (x * y).hash());
  }
}
