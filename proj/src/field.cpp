#include "icosian/field.hpp"

#include <mpfr.h>

#include <cmath>
#include <vector>

#include "icosian/errors.hpp"

namespace icosian {

FieldElement FieldElement::operator-() const {
  return {-c_[0], -c_[1], -c_[2], -c_[3]};
}

FieldElement operator+(const FieldElement &x, const FieldElement &y) {
  return {x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2],
          x.c_[3] + y.c_[3]};
}

FieldElement operator-(const FieldElement &x, const FieldElement &y) {
  return {x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2],
          x.c_[3] - y.c_[3]};
}

// sqrt2^2 = 2, sqrt5^2 = 5, sqrt10^2 = 10, sqrt2*sqrt5 = sqrt10,
// sqrt2*sqrt10 = 2*sqrt5, sqrt5*sqrt10 = 5*sqrt2.
FieldElement operator*(const FieldElement &x, const FieldElement &y) {
  const auto &[a1, b1, c1, d1] = x.c_;
  const auto &[a2, b2, c2, d2] = y.c_;
  if (y.is_rational())
    return a2 * x;
  if (x.is_rational())
    return a1 * y;
  return {a1 * a2 + Rational(2) * (b1 * b2) + Rational(5) * (c1 * c2) +
              Rational(10) * (d1 * d2),
          a1 * b2 + b1 * a2 + Rational(5) * (c1 * d2 + d1 * c2),
          a1 * c2 + c1 * a2 + Rational(2) * (b1 * d2 + d1 * b2),
          a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2};
}

FieldElement operator*(const Rational &k, const FieldElement &x) {
  if (k.is_one())
    return x;
  return {k * x.c_[0], k * x.c_[1], k * x.c_[2], k * x.c_[3]};
}

FieldElement operator/(const FieldElement &x, const FieldElement &y) {
  return x * invert(y);
}

std::size_t FieldElement::hash() const {
  std::size_t h = 0;
  for (const auto &r : c_)
    h = h * 1000003u ^ r.hash();
  return h;
}

std::strong_ordering lex_order(const FieldElement &x, const FieldElement &y) {
  for (std::size_t i = 0; i < 4; ++i) {
    auto c = x.coeff(i) <=> y.coeff(i);
    if (c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

FieldElement galois(const FieldElement &x, Conjugation which) {
  const auto &c = x.coeffs();
  if (which == Conjugation::Sqrt5)
    return {c[0], c[1], -c[2], -c[3]};
  return {c[0], -c[1], c[2], -c[3]};
}

// x * g2(x) * g5(x) * g25(x) is rational; the product of the three nontrivial
// conjugates over that norm is the inverse.
FieldElement invert(const FieldElement &x) {
  if (x.is_zero())
    throw DivisionByZero("inverse of zero field element");
  if (x.is_rational())
    return FieldElement(x.coeff(0).reciprocal());
  FieldElement g2 = galois(x, Conjugation::Sqrt2);
  FieldElement g5 = galois(x, Conjugation::Sqrt5);
  FieldElement g25 = galois(g2, Conjugation::Sqrt5);
  FieldElement adj = g2 * g5 * g25;
  FieldElement norm = x * adj;
  return norm.coeff(0).reciprocal() * adj;
}

GoldenPair golden_decompose(const FieldElement &value) {
  if (!value.in_golden_subfield())
    throw NotInGoldenSubfield(to_string(value));
  const Rational &a = value.coeff(0);
  const Rational &c = value.coeff(2);
  return {a + c, Rational(-2) * c};
}

Rational euclidean_part(const FieldElement &value) {
  return golden_decompose(value).x;
}

namespace {

std::optional<Rational> sqrt_rational(const Rational &r) {
  if (r.sign() < 0)
    return std::nullopt;
  mpq_class q = r.to_mpq();
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational::from_mpq(mpq_class(n, d));
}

// Square root of a + b*r in the extension F(r), r^2 = k, given a square root
// routine for F. Any root u + v*r satisfies u^2 + k v^2 = a and 2uv = b, so
// u^2 = (a +- sqrt(a^2 - k b^2)) / 2.
template <class Root>
std::optional<FieldElement> sqrt_in_extension(const FieldElement &a,
                                              const FieldElement &b,
                                              const FieldElement &r,
                                              const Rational &k, Root root) {
  const FieldElement target = a + b * r;
  auto check = [&](const FieldElement &cand) -> std::optional<FieldElement> {
    if (cand * cand == target)
      return cand;
    return std::nullopt;
  };
  if (b.is_zero()) {
    if (auto u = root(a))
      return *u;
    if (auto v = root(a * FieldElement(k.reciprocal())))
      return check(*v * r);
    return std::nullopt;
  }
  auto d = root(a * a - FieldElement(k) * b * b);
  if (!d)
    return std::nullopt;
  for (const FieldElement &dd : {*d, -*d}) {
    auto u = root(Rational(1, 2) * (a + dd));
    if (!u || u->is_zero())
      continue;
    FieldElement v = b * invert(FieldElement(2) * *u);
    if (auto c = check(*u + v * r))
      return c;
  }
  return std::nullopt;
}

std::optional<FieldElement> sqrt_golden(const FieldElement &x) {
  auto root = [](const FieldElement &y) -> std::optional<FieldElement> {
    if (!y.is_rational())
      return std::nullopt;
    if (auto q = sqrt_rational(y.coeff(0)))
      return FieldElement(*q);
    return std::nullopt;
  };
  return sqrt_in_extension(FieldElement(x.coeff(0)), FieldElement(x.coeff(2)),
                           FieldElement::sqrt5(), Rational(5), root);
}

} // namespace

std::optional<FieldElement> sqrt_exact(const FieldElement &x) {
  if (sign(x) < 0)
    return std::nullopt;
  const FieldElement r5 = FieldElement::sqrt5();
  FieldElement a = FieldElement(x.coeff(0)) + FieldElement(x.coeff(2)) * r5;
  FieldElement b = FieldElement(x.coeff(1)) + FieldElement(x.coeff(3)) * r5;
  auto root = [](const FieldElement &y) -> std::optional<FieldElement> {
    if (!y.in_golden_subfield())
      return std::nullopt;
    return sqrt_golden(y);
  };
  auto s = sqrt_in_extension(a, b, FieldElement::sqrt2(), Rational(2), root);
  if (s && sign(*s) < 0)
    s = -*s;
  return s;
}

namespace {

// sign(p + q*sqrt(k)) for rational p, q and non-square k.
int sign_quadratic(const Rational &p, const Rational &q, std::int64_t k) {
  int sp = p.sign(), sq = q.sign();
  if (sq == 0)
    return sp;
  if (sp == 0 || sp == sq)
    return sq;
  return (p * p - Rational(k) * (q * q)).sign() * sp;
}

struct Golden {
  Rational p, q; // p + q*sqrt5
};

int sign_golden(const Golden &g) { return sign_quadratic(g.p, g.q, 5); }

Golden golden_square(const Golden &g) {
  return {g.p * g.p + Rational(5) * (g.q * g.q), Rational(2) * (g.p * g.q)};
}

} // namespace

// Writes x = u + sqrt2*v with u, v in Q(sqrt5) and decides by squaring when
// the two parts disagree in sign.
int sign(const FieldElement &x) {
  const auto &c = x.coeffs();
  Golden u{c[0], c[2]};
  Golden v{c[1], c[3]};
  int su = sign_golden(u), sv = sign_golden(v);
  if (sv == 0)
    return su;
  if (su == 0 || su == sv)
    return sv;
  Golden u2 = golden_square(u), v2 = golden_square(v);
  Golden diff{u2.p - Rational(2) * v2.p, u2.q - Rational(2) * v2.q};
  return sign_golden(diff) * su;
}

namespace {

class MpfrValue {
public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue &) = delete;
  MpfrValue &operator=(const MpfrValue &) = delete;
  mpfr_ptr get() { return v_; }

private:
  mpfr_t v_;
};

void evaluate(const FieldElement &x, mpfr_ptr out, mpfr_prec_t prec) {
  MpfrValue term(prec), root(prec);
  mpfr_set_ui(out, 0, MPFR_RNDN);
  const unsigned long radicands[4] = {1, 2, 5, 10};
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational &r = x.coeff(i);
    if (r.is_zero())
      continue;
    mpq_class q = r.to_mpq();
    mpfr_set_q(term.get(), q.get_mpq_t(), MPFR_RNDN);
    if (radicands[i] != 1) {
      mpfr_sqrt_ui(root.get(), radicands[i], MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), root.get(), MPFR_RNDN);
    }
    mpfr_add(out, out, term.get(), MPFR_RNDN);
  }
}

} // namespace

std::string to_decimal(const FieldElement &x, int digits) {
  if (x.is_zero())
    return "0";
  constexpr mpfr_prec_t kPrec = 1024;
  MpfrValue v(kPrec);
  evaluate(x, v.get(), kPrec);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v.get());
  return std::string(buf.data());
}

double to_double(const FieldElement &x) {
  constexpr mpfr_prec_t kPrec = 256;
  MpfrValue v(kPrec);
  evaluate(x, v.get(), kPrec);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

std::string to_string(const FieldElement &x) {
  static const char *names[4] = {"", "*sqrt2", "*sqrt5", "*sqrt10"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational &r = x.coeff(i);
    if (r.is_zero())
      continue;
    if (!out.empty())
      out += " + ";
    mpq_class q = r.to_mpq();
    out += q.get_str() + names[i];
  }
  return out.empty() ? "0" : out;
}

} // namespace icosian
