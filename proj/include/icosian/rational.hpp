#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace icosian {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline
/// and combined with 128-bit intermediates; anything larger is promoted to a
/// shared immutable GMP rational. The representation is unique (a value is
/// inline iff it fits), so equality and hashing are structural.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  static Rational from_mpq(const mpq_class &q);
  mpq_class to_mpq() const;

  /// Parses "num/den" or "num" (arbitrary size, optional sign on num).
  static Rational parse(std::string_view text);
  /// Renders "num/den" in lowest terms, always with an explicit denominator.
  std::string str() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;
  bool is_big() const { return static_cast<bool>(big_); }

  Rational operator-() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational &x, const Rational &y);
  friend Rational operator-(const Rational &x, const Rational &y);
  friend Rational operator*(const Rational &x, const Rational &y);
  friend Rational operator/(const Rational &x, const Rational &y);

  Rational &operator+=(const Rational &y) { return *this = *this + y; }
  Rational &operator-=(const Rational &y) { return *this = *this - y; }
  Rational &operator*=(const Rational &y) { return *this = *this * y; }

  friend bool operator==(const Rational &x, const Rational &y);
  friend std::strong_ordering operator<=>(const Rational &x,
                                          const Rational &y);

  std::size_t hash() const;

private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational normalized(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

} // namespace icosian
