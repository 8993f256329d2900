#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "icosian/rational.hpp"

namespace icosian {

/// Exact element a + b*sqrt2 + c*sqrt5 + d*sqrt10 of Q(sqrt2, sqrt5).
///
/// The basis {1, sqrt2, sqrt5, sqrt10} is linearly independent over Q, so
/// every value has exactly one coefficient vector and zero-testing is
/// structural. The golden ratio tau = (1+sqrt5)/2 and its conjugate
/// sigma = (1-sqrt5)/2 live in the b = d = 0 subfield.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(Rational a) : c_{std::move(a), {}, {}, {}} {} // NOLINT
  FieldElement(std::int64_t a) : FieldElement(Rational(a)) {} // NOLINT
  FieldElement(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static FieldElement sqrt2() { return {0, 1, 0, 0}; }
  static FieldElement sqrt5() { return {0, 0, 1, 0}; }
  static FieldElement sqrt10() { return {0, 0, 0, 1}; }
  static FieldElement tau() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }
  static FieldElement sigma() {
    return {Rational(1, 2), 0, Rational(-1, 2), 0};
  }

  /// Coefficient on basis element i: 0 -> 1, 1 -> sqrt2, 2 -> sqrt5, 3 -> sqrt10.
  const Rational &coeff(std::size_t i) const { return c_[i]; }
  const std::array<Rational, 4> &coeffs() const { return c_; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() &&
           c_[3].is_zero();
  }
  bool is_rational() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool in_golden_subfield() const { return c_[1].is_zero() && c_[3].is_zero(); }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement &x, const FieldElement &y);
  friend FieldElement operator-(const FieldElement &x, const FieldElement &y);
  friend FieldElement operator*(const FieldElement &x, const FieldElement &y);
  friend FieldElement operator*(const Rational &k, const FieldElement &x);
  friend FieldElement operator/(const FieldElement &x, const FieldElement &y);

  FieldElement &operator+=(const FieldElement &y) { return *this = *this + y; }
  FieldElement &operator-=(const FieldElement &y) { return *this = *this - y; }
  FieldElement &operator*=(const FieldElement &y) { return *this = *this * y; }

  friend bool operator==(const FieldElement &, const FieldElement &) = default;

  std::size_t hash() const;

private:
  std::array<Rational, 4> c_;
};

/// Coefficient-wise lexicographic order. This is the canonical storage order,
/// not the order of real values; use compare() for the latter.
std::strong_ordering lex_order(const FieldElement &x, const FieldElement &y);

FieldElement invert(const FieldElement &x);

struct GoldenPair {
  Rational x;
  Rational y;
  friend bool operator==(const GoldenPair &, const GoldenPair &) = default;
};

/// Writes an element of Q(sqrt5) as x + sigma*y with rational x, y.
GoldenPair golden_decompose(const FieldElement &value);

/// The x of golden_decompose: the E8 "Euclidean" part of a golden scalar.
Rational euclidean_part(const FieldElement &value);

enum class Conjugation { Sqrt5, Sqrt2 };

/// Field automorphism negating sqrt5 (swaps tau and sigma) or sqrt2.
FieldElement galois(const FieldElement &x, Conjugation which);

/// Exact sign of the real value of x.
int sign(const FieldElement &x);

/// sign(x - y), comparing real values.
inline int compare(const FieldElement &x, const FieldElement &y) {
  return sign(x - y);
}

/// Nonnegative square root when it lies in the field, else nullopt.
std::optional<FieldElement> sqrt_exact(const FieldElement &x);

/// Decimal rendering with `digits` significant digits, correctly rounded from
/// a high-precision evaluation. Zero renders as "0".
std::string to_decimal(const FieldElement &x, int digits = 17);

/// Double approximation for diagnostics and floating-point consumers.
double to_double(const FieldElement &x);

/// Human-readable form such as "1/2 + 1/2*sqrt5".
std::string to_string(const FieldElement &x);

} // namespace icosian
