#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "icosian/quaternion.hpp"

namespace icosian {

/// Orthogonal map r -> p r q (star = false) or r -> p conj(r) q (star = true).
///
/// [p, q] and [-p, -q] act identically; the constructor picks the
/// representative whose first nonzero rational coefficient of p is positive,
/// so structural equality is equality of maps.
class Transform {
public:
  Transform() : Transform(Quaternion::one(), Quaternion::one(), false) {}
  Transform(Quaternion p, Quaternion q, bool star);

  static Transform identity() { return {}; }

  const Quaternion &left() const { return p_; }
  const Quaternion &right() const { return q_; }
  bool star() const { return star_; }

  friend bool operator==(const Transform &, const Transform &) = default;

  std::size_t hash() const;

private:
  Quaternion p_;
  Quaternion q_;
  bool star_ = false;
};

struct TransformHash {
  std::size_t operator()(const Transform &t) const { return t.hash(); }
};

std::strong_ordering lex_order(const Transform &a, const Transform &b);

struct TransformLess {
  bool operator()(const Transform &a, const Transform &b) const {
    return lex_order(a, b) < 0;
  }
};

Quaternion apply(const Transform &t, const Quaternion &r);

/// The map r -> outer(inner(r)).
Transform compose(const Transform &outer, const Transform &inner);
Transform inverse(const Transform &t);

/// Reflection in the hyperplane orthogonal to the unit quaternion alpha:
/// r -> -alpha conj(r) alpha, i.e. [-alpha, alpha]*.
Transform reflection(const Quaternion &alpha);

/// Finite group of transforms. `elements` is canonical (sorted, unique);
/// `generators` generate the same group and drive orbit computations. An
/// empty generator list means "use all elements".
struct TransformGroup {
  std::vector<Transform> elements;
  std::vector<Transform> generators;
  std::string label;

  std::size_t order() const { return elements.size(); }
  bool contains(const Transform &t) const;
};

enum class GroupKind { WH4, WD4C3, WH3xC2, A4xC2, S4, S3, Custom };

/// Named group recipe. `param` is q (WH3xC2, q in I; A4xC2, q in T),
/// c (S4, c in T') or p (S3, p in the snub set); `custom` lists generators.
struct GroupSpec {
  GroupKind kind = GroupKind::WH4;
  Quaternion param;
  std::vector<Transform> custom;

  static GroupSpec wh4() { return {GroupKind::WH4, {}, {}}; }
  static GroupSpec wd4c3() { return {GroupKind::WD4C3, {}, {}}; }
  static GroupSpec wh3xc2(Quaternion q) { return {GroupKind::WH3xC2, q, {}}; }
  static GroupSpec a4xc2(Quaternion q) { return {GroupKind::A4xC2, q, {}}; }
  static GroupSpec s4(Quaternion c) { return {GroupKind::S4, c, {}}; }
  static GroupSpec s3(Quaternion p) { return {GroupKind::S3, p, {}}; }
  static GroupSpec from_generators(std::vector<Transform> gens) {
    return {GroupKind::Custom, {}, std::move(gens)};
  }
};

TransformGroup build_group(const GroupSpec &spec);

/// Closure of a generator list under composition.
TransformGroup generate(const std::vector<Transform> &generators,
                        std::string label = {}, std::size_t cap = 20000);

/// {h g h^-1 : g in G}.
TransformGroup conjugate(const TransformGroup &group, const Transform &h);

/// The generators of the vertex stabilizer of p = (tau + e1 + sigma e3)/2 in
/// W(D4):C3: [s1, s2] and [e2, -e2]*.
std::vector<Transform> s3_generators();

VertexSet orbit(const TransformGroup &group, const Quaternion &v);
TransformGroup stabilizer(const TransformGroup &group, const Quaternion &v);

/// Some g in the group with apply(g, from) == to; throws BadParameter if the
/// two points lie in different orbits.
Transform transporter(const TransformGroup &group, const Quaternion &from,
                      const Quaternion &to);

struct OrbitPartition {
  std::vector<VertexSet> suborbits; // ordered by smallest member
  std::vector<std::size_t> sizes;   // sorted ascending
};

/// Splits an invariant vertex set into orbits. Throws NotInvariant when some
/// image leaves the set.
OrbitPartition orbit_decompose(const TransformGroup &group, const VertexSet &v);

} // namespace icosian
