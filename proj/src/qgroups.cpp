#include "icosian/qgroups.hpp"

#include <algorithm>
#include <unordered_set>

#include "icosian/errors.hpp"
#include "icosian/parallel.hpp"

namespace icosian {

Quaternion half(const FieldElement &a, const FieldElement &b,
                const FieldElement &c, const FieldElement &d) {
  const Rational h(1, 2);
  return {h * a, h * b, h * c, h * d};
}

Quaternion canonical_p() {
  return half(FieldElement::tau(), 1, 0, FieldElement::sigma());
}

QuaternionGroup closure(const std::vector<Quaternion> &generators,
                        std::size_t cap, std::string label) {
  for (const auto &g : generators)
    if (!(norm2(g) == FieldElement(1)))
      throw BadParameter("closure generator is not a unit quaternion");
  auto step = [&](const Quaternion &x, std::vector<Quaternion> &out) {
    for (const auto &g : generators)
      out.push_back(qmul(x, g));
  };
  QuaternionGroup group;
  group.elements = closure_of<Quaternion, QuaternionHash>(
      {Quaternion::one()}, step, cap, LexLess{}, "quaternion group closure");
  group.label = std::move(label);
  return group;
}

VertexSet d4_vector_orbit(int k) {
  if (k < 1 || k > 3)
    throw BadParameter("D4 vector orbit index must be 1, 2 or 3");
  const std::size_t a = static_cast<std::size_t>(k);
  const std::size_t i = a % 3 + 1, j = (a + 1) % 3 + 1;
  const Rational h(1, 2);
  std::vector<Quaternion> out;
  for (std::size_t pair = 0; pair < 2; ++pair) {
    std::size_t u = pair == 0 ? 0 : i, v = pair == 0 ? a : j;
    for (int su : {1, -1})
      for (int sv : {1, -1}) {
        std::array<FieldElement, 4> c;
        c[u] = FieldElement(h * Rational(su));
        c[v] = FieldElement(h * Rational(sv));
        out.emplace_back(c[0], c[1], c[2], c[3]);
      }
  }
  return canonical(std::move(out));
}

QuaternionGroup binary_tetrahedral() {
  std::vector<Quaternion> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.push_back(Quaternion::unit(i));
    out.push_back(-Quaternion::unit(i));
  }
  for (int mask = 0; mask < 16; ++mask) {
    auto s = [&](int bit) { return FieldElement((mask >> bit) & 1 ? -1 : 1); };
    out.push_back(half(s(0), s(1), s(2), s(3)));
  }
  return {canonical(std::move(out)), "T"};
}

VertexSet t_prime() {
  VertexSet all;
  for (int k = 1; k <= 3; ++k)
    all = set_union(all, d4_vector_orbit(k));
  return scaled(FieldElement::sqrt2(), all);
}

QuaternionGroup binary_octahedral() {
  std::vector<Quaternion> gens = binary_tetrahedral().elements;
  VertexSet tp = t_prime();
  gens.insert(gens.end(), tp.begin(), tp.end());
  return closure(gens, 100, "O");
}

QuaternionGroup binary_icosahedral() {
  const VertexSet t = binary_tetrahedral().elements;
  const Quaternion p = canonical_p();
  std::vector<Quaternion> out;
  Quaternion pj = Quaternion::one();
  for (int j = 0; j < 5; ++j) {
    for (const auto &x : t)
      out.push_back(qmul(pj, x));
    pj = qmul(pj, p);
  }
  return {canonical(std::move(out)), "I"};
}

unsigned element_order(const Quaternion &q, unsigned cap) {
  Quaternion x = q;
  for (unsigned n = 1; n <= cap; ++n) {
    if (x == Quaternion::one())
      return n;
    x = qmul(x, q);
  }
  throw CapExceeded("element order exceeds " + std::to_string(cap));
}

ConjugacyClassTable conjugacy_classes(const QuaternionGroup &group) {
  std::unordered_set<Quaternion, QuaternionHash> assigned;
  ConjugacyClassTable table;
  for (const auto &x : group.elements) {
    if (assigned.count(x))
      continue;
    std::vector<Quaternion> members;
    for (const auto &g : group.elements)
      members.push_back(qmul(qmul(g, x), qconj(g)));
    ConjugacyClass cls;
    cls.members = canonical(std::move(members));
    cls.element_order = element_order(x);
    for (const auto &m : cls.members)
      assigned.insert(m);
    table.classes.push_back(std::move(cls));
  }
  std::stable_sort(table.classes.begin(), table.classes.end(),
                   [](const ConjugacyClass &a, const ConjugacyClass &b) {
                     return compare(a.members.front()[0],
                                    b.members.front()[0]) > 0;
                   });
  return table;
}

std::string icosahedral_class_label(const ConjugacyClass &cls) {
  const FieldElement re = cls.members.front()[0];
  const Rational h(1, 2);
  const FieldElement tau = FieldElement::tau(), sigma = FieldElement::sigma();
  if (re == FieldElement(1))
    return "1";
  if (re == FieldElement(-1))
    return "-1";
  if (re == h * tau)
    return "12+";
  if (re == -(h * tau))
    return "12-";
  if (re == h * sigma)
    return "12'+";
  if (re == -(h * sigma))
    return "12'-";
  if (re == FieldElement(h))
    return "20+";
  if (re == FieldElement(-h))
    return "20-";
  if (re.is_zero())
    return "30";
  return "?";
}

VertexSet class_12_plus() {
  const FieldElement target = Rational(1, 2) * FieldElement::tau();
  VertexSet out;
  for (const auto &q : binary_icosahedral().elements)
    if (q[0] == target)
      out.push_back(q);
  return out;
}

} // namespace icosian
