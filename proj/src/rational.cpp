#include "icosian/rational.hpp"

#include <limits>

#include "icosian/errors.hpp"

namespace icosian {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

int ctz128(u128 x) {
  auto lo = static_cast<std::uint64_t>(x);
  if (lo != 0)
    return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

// Binary gcd with a 64-bit Euclid fast path.
u128 gcd128(u128 a, u128 b) {
  if (a == 0)
    return b;
  if (b == 0)
    return a;
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    auto x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
    while (y != 0) {
      auto t = x % y;
      x = y;
      y = t;
    }
    return x;
  }
  int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) {
      u128 t = a;
      a = b;
      b = t;
    }
    b -= a;
  } while (b != 0);
  return a << shift;
}

bool fits_small(i128 x) { return x <= kSmallMax && x >= -kSmallMax; }

mpz_class mpz_from_i128(i128 x) {
  u128 m = abs128(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return x < 0 ? mpz_class(-r) : r;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace

Rational::Rational(std::int64_t n) : num_(n) {
  if (n == std::numeric_limits<std::int64_t>::min())
    *this = normalized(mpq_class(mpz_from_i128(n)));
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0)
    throw DivisionByZero("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0)
    return Rational();
  u128 g = gcd128(abs128(num), u128(den));
  if (g != 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits_small(num) && fits_small(den)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::normalized(mpq_class q) {
  q.canonicalize();
  const mpz_class &n = q.get_num();
  const mpz_class &d = q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63 &&
      mpz_sizeinbase(d.get_mpz_t(), 2) <= 63) {
    Rational r;
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(const mpq_class &q) { return normalized(q); }

mpq_class Rational::to_mpq() const {
  if (big_)
    return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),
                   mpz_class(static_cast<long>(den_)));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(1);
    if (slash != std::string::npos)
      den = mpz_class(s.substr(slash + 1), 10);
    if (den == 0)
      throw DivisionByZero("rational literal '" + s + "'");
    return normalized(mpq_class(num, den));
  } catch (const std::invalid_argument &) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

std::string Rational::str() const {
  if (big_)
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const {
  if (big_)
    return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
  if (big_)
    return normalized(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero())
    throw DivisionByZero("reciprocal of zero");
  if (big_)
    return normalized(1 / *big_);
  return from_wide(den_, num_);
}

Rational operator+(const Rational &x, const Rational &y) {
  if (!x.big_ && !y.big_) {
    if (x.num_ == 0)
      return y;
    if (y.num_ == 0)
      return x;
    if (x.den_ == y.den_)
      return Rational::from_wide(i128(x.num_) + y.num_, x.den_);
    return Rational::from_wide(i128(x.num_) * y.den_ + i128(y.num_) * x.den_,
                               i128(x.den_) * y.den_);
  }
  return Rational::normalized(x.to_mpq() + y.to_mpq());
}

Rational operator-(const Rational &x, const Rational &y) { return x + (-y); }

Rational operator*(const Rational &x, const Rational &y) {
  if (!x.big_ && !y.big_) {
    if (x.num_ == 0 || y.num_ == 0)
      return Rational();
    if (x.den_ == 1 && y.den_ == 1) {
      i128 p = i128(x.num_) * y.num_;
      if (fits_small(p)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(p);
        return r;
      }
    }
    return Rational::from_wide(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
  }
  return Rational::normalized(x.to_mpq() * y.to_mpq());
}

Rational operator/(const Rational &x, const Rational &y) {
  return x * y.reciprocal();
}

bool operator==(const Rational &x, const Rational &y) {
  if (!x.big_ && !y.big_)
    return x.num_ == y.num_ && x.den_ == y.den_;
  if (x.big_ && y.big_)
    return *x.big_ == *y.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational &x, const Rational &y) {
  if (!x.big_ && !y.big_) {
    i128 l = i128(x.num_) * y.den_;
    i128 r = i128(y.num_) * x.den_;
    return l <=> r;
  }
  int c = cmp(x.to_mpq(), y.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (!big_)
    return mix(std::hash<std::int64_t>{}(num_), std::hash<std::int64_t>{}(den_));
  std::size_t h = 0x51ed27;
  for (const mpz_class *z : {&big_->get_num(), &big_->get_den()}) {
    const mpz_srcptr p = z->get_mpz_t();
    std::size_t n = mpz_size(p);
    h = mix(h, static_cast<std::size_t>(mpz_sgn(p)));
    for (std::size_t i = 0; i < n; ++i)
      h = mix(h, static_cast<std::size_t>(mpz_getlimbn(p, i)));
  }
  return h;
}

} // namespace icosian
