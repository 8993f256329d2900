#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "icosian/field.hpp"

namespace icosian {

/// q0 + q1*e1 + q2*e2 + q3*e3 with coefficients in Q(sqrt2, sqrt5).
class Quaternion {
public:
  Quaternion() = default;
  Quaternion(FieldElement q0, FieldElement q1, FieldElement q2,
             FieldElement q3)
      : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

  /// Unit along basis direction i (0 -> 1, 1..3 -> e1..e3).
  static Quaternion unit(std::size_t i);
  static Quaternion one() { return unit(0); }

  const FieldElement &operator[](std::size_t i) const { return c_[i]; }
  const std::array<FieldElement, 4> &components() const { return c_; }

  bool is_zero() const;

  Quaternion operator-() const;
  friend Quaternion operator+(const Quaternion &p, const Quaternion &q);
  friend Quaternion operator-(const Quaternion &p, const Quaternion &q);
  friend Quaternion operator*(const FieldElement &k, const Quaternion &q);

  friend bool operator==(const Quaternion &, const Quaternion &) = default;

  std::size_t hash() const;

private:
  std::array<FieldElement, 4> c_;
};

struct QuaternionHash {
  std::size_t operator()(const Quaternion &q) const { return q.hash(); }
};

/// Hamilton product with e_i e_j = -delta_ij + epsilon_ijk e_k.
Quaternion qmul(const Quaternion &p, const Quaternion &q);
Quaternion qconj(const Quaternion &q);

/// (p, q) = (conj(p) q + conj(q) p) / 2, the Euclidean inner product on R^4.
FieldElement scalar_product(const Quaternion &p, const Quaternion &q);
inline FieldElement norm2(const Quaternion &q) { return scalar_product(q, q); }

/// Euclidean part of the golden-valued scalar product (the E8 metric).
Rational euclid_scalar_product(const Quaternion &p, const Quaternion &q);

/// Component-wise tau <-> sigma swap.
Quaternion qgalois(const Quaternion &p);

/// q^n for n >= 0.
Quaternion qpow(const Quaternion &q, unsigned n);

/// Lexicographic order on the 16 rational coefficients; the canonical order of
/// every vertex set and group in the library.
std::strong_ordering lex_order(const Quaternion &p, const Quaternion &q);

struct LexLess {
  bool operator()(const Quaternion &p, const Quaternion &q) const {
    return lex_order(p, q) < 0;
  }
};

/// Sorted, duplicate-free list of quaternions.
using VertexSet = std::vector<Quaternion>;

VertexSet canonical(std::vector<Quaternion> points);
bool contains(const VertexSet &set, const Quaternion &q);
/// Position of q in the canonical set, if present.
std::optional<std::size_t> index_of(const VertexSet &set, const Quaternion &q);
VertexSet set_union(const VertexSet &a, const VertexSet &b);
VertexSet set_difference(const VertexSet &a, const VertexSet &b);
VertexSet set_intersection(const VertexSet &a, const VertexSet &b);
VertexSet scaled(const FieldElement &k, const VertexSet &set);

/// Representative of the open ray through q: q divided by the absolute value
/// of its first nonzero component. Two nonzero quaternions are positive
/// multiples of each other iff their rays are equal.
Quaternion ray(const Quaternion &q);
bool projectively_equal(const Quaternion &p, const Quaternion &q);
/// Canonical set of rays of the given points.
VertexSet ray_set(const VertexSet &set);

/// Solves (rows[i], x) = rhs[i] for x; rows must be four linearly independent
/// quaternions. Returns nullopt when they are not.
std::optional<Quaternion> solve_scalar_products(std::span<const Quaternion> rows,
                                                std::span<const FieldElement> rhs);

/// Dimension of the real span of the given quaternions.
std::size_t rank(std::span<const Quaternion> vectors);

} // namespace icosian
