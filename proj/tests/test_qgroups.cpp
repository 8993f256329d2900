#include "doctest.h"

#include <algorithm>

#include "icosian/errors.hpp"
#include "icosian/qgroups.hpp"
#include "icosian/reference.hpp"

using namespace icosian;

namespace {
const FieldElement tau = FieldElement::tau();
const FieldElement sigma = FieldElement::sigma();

bool closed_under_product(const QuaternionGroup &g) {
  for (const auto &a : g.elements)
    for (const auto &b : g.elements)
      if (!g.contains(qmul(a, b)))
        return false;
  return true;
}
} // namespace

TEST_CASE("qgroups: closure") {
  auto t = closure({Quaternion::unit(1), Quaternion::unit(2),
                    Quaternion::unit(3), half(1, -1, -1, -1)},
                   100);
  CHECK(t.order() == 24);
  CHECK(t.elements == binary_tetrahedral().elements);

  std::vector<Quaternion> gens = binary_tetrahedral().elements;
  gens.push_back(canonical_p());
  auto i = closure(gens, 200);
  CHECK(i.order() == 120);
  CHECK(i.elements == binary_icosahedral().elements);

  auto trivial = closure({Quaternion::one()}, 10);
  CHECK(trivial.elements == VertexSet{Quaternion::one()});

  CHECK_THROWS_AS(closure({canonical_p(), Quaternion::unit(1)}, 50),
                  CapExceeded);
  CHECK_THROWS_AS(closure({Quaternion::one() + Quaternion::unit(1)}, 50),
                  BadParameter);
}

TEST_CASE("qgroups: binary tetrahedral group") {
  auto t = binary_tetrahedral();
  CHECK(t.order() == 24);
  CHECK(t.contains(half(1, 1, 1, 1)));
  CHECK(closed_under_product(t));
}

TEST_CASE("qgroups: T' and the binary octahedral group") {
  VertexSet tp = t_prime();
  CHECK(tp.size() == 24);
  const FieldElement inv_r2 = Rational(1, 2) * FieldElement::sqrt2();
  CHECK(contains(tp, inv_r2 * (Quaternion::one() + Quaternion::unit(1))));
  for (const auto &q : tp)
    CHECK(norm2(q) == FieldElement(1));
  CHECK(binary_octahedral().order() == 48);
  CHECK(set_intersection(tp, binary_icosahedral().elements).empty());
}

TEST_CASE("qgroups: binary icosahedral group and its coset structure") {
  auto i = binary_icosahedral();
  auto t = binary_tetrahedral();
  CHECK(i.order() == 120);
  CHECK(closed_under_product(i));
  for (const auto &q : i.elements)
    CHECK(norm2(q) == FieldElement(1));
  CHECK(set_difference(t.elements, i.elements).empty());
  CHECK(set_difference(i.elements, t.elements).size() == 96);

  // Left cosets p^j T and right cosets T p^j both tile I; so do those of any
  // conjugate of p.
  for (const auto &q : {Quaternion::one(), half(1, 1, 1, 1), canonical_p(),
                        half(sigma, 0, 1, tau)}) {
    const Quaternion pc = qmul(qmul(q, canonical_p()), qconj(q));
    VertexSet left_union, right_union;
    std::size_t total = 0;
    for (unsigned j = 0; j < 5; ++j) {
      std::vector<Quaternion> left, right;
      for (const auto &x : t.elements) {
        left.push_back(qmul(qpow(pc, j), x));
        right.push_back(qmul(x, qpow(pc, j)));
      }
      VertexSet l = canonical(left), r = canonical(right);
      total += l.size();
      left_union = set_union(left_union, l);
      right_union = set_union(right_union, r);
    }
    CHECK(total == 120);
    CHECK(left_union == i.elements);
    CHECK(right_union == i.elements);
  }
}

TEST_CASE("qgroups: conjugacy classes of I match the reference table") {
  auto table = conjugacy_classes(binary_icosahedral());
  REQUIRE(table.classes.size() == 9);
  std::vector<std::pair<std::size_t, unsigned>> got;
  for (const auto &c : table.classes)
    got.emplace_back(c.size(), c.element_order);
  std::sort(got.begin(), got.end());
  std::vector<std::pair<std::size_t, unsigned>> want = {
      {1, 1}, {1, 2}, {12, 5}, {12, 5}, {12, 10},
      {12, 10}, {20, 3}, {20, 6}, {30, 4}};
  CHECK(got == want);

  auto rows = reference::binary_icosahedral_classes();
  for (const auto &row : rows) {
    auto it = std::find_if(table.classes.begin(), table.classes.end(),
                           [&](const ConjugacyClass &c) {
                             return icosahedral_class_label(c) == row.label;
                           });
    REQUIRE(it != table.classes.end());
    CHECK(it->members == row.members);
    CHECK(it->element_order == row.element_order);
  }
  VertexSet twelve = class_12_plus();
  CHECK(contains(twelve, canonical_p()));
  for (const auto &q : twelve)
    CHECK(scalar_product(q, Quaternion::one()) == Rational(1, 2) * tau);

  auto single = conjugacy_classes(closure({Quaternion::one()}, 2));
  REQUIRE(single.classes.size() == 1);
  CHECK(single.classes[0].element_order == 1);
}
