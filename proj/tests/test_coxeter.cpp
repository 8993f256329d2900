#include "doctest.h"

#include <random>

#include "icosian/coxeter.hpp"
#include "icosian/errors.hpp"
#include "icosian/parallel.hpp"
#include "icosian/qgroups.hpp"
#include "oracles.hpp"

using namespace icosian;

namespace {
const Quaternion one = Quaternion::one();
const Quaternion e1 = Quaternion::unit(1), e2 = Quaternion::unit(2);

Quaternion c1() {
  return (Rational(1, 2) * FieldElement::sqrt2()) * (one + e1);
}

const TransformGroup &wh4() {
  static const TransformGroup g = build_group(GroupSpec::wh4());
  return g;
}

const TransformGroup &wd4c3() {
  static const TransformGroup g = build_group(GroupSpec::wd4c3());
  return g;
}

void check_orbit_stabilizer(const TransformGroup &g, const Quaternion &v) {
  CHECK(orbit(g, v).size() * stabilizer(g, v).order() == g.order());
}
} // namespace

TEST_CASE("coxeter: apply and compose") {
  const Quaternion p = canonical_p();
  CHECK(apply(Transform::identity(), p) == p);
  CHECK(apply(Transform(e2, -e2, true), p) == p);
  CHECK(apply(s3_generators()[0], p) == p);
  const Quaternion q = half(1, 1, 1, 1);
  CHECK(compose(Transform(p, q, false), Transform(qconj(p), qconj(q), false)) ==
        Transform::identity());
  Transform g(e2, -e2, true);
  CHECK(compose(g, g) == Transform::identity());
  CHECK(Transform(-p, -q, true) == Transform(p, q, true));

  std::mt19937_64 rng(3);
  auto i = binary_icosahedral().elements;
  std::uniform_int_distribution<std::size_t> pick(0, i.size() - 1);
  std::bernoulli_distribution coin;
  for (int k = 0; k < 200; ++k) {
    Transform a(i[pick(rng)], i[pick(rng)], coin(rng));
    Transform b(i[pick(rng)], i[pick(rng)], coin(rng));
    Quaternion r = oracle::random_quaternion(rng);
    CHECK(apply(compose(a, b), r) == apply(a, apply(b, r)));
    CHECK(apply(inverse(a), apply(a, r)) == r);
  }
}

TEST_CASE("coxeter: every transform is an isometry") {
  std::mt19937_64 rng(5);
  const auto &els = wh4().elements;
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int k = 0; k < 300; ++k) {
    const Transform &t = els[pick(rng)];
    Quaternion a = oracle::random_quaternion(rng);
    Quaternion b = oracle::random_quaternion(rng);
    CHECK(scalar_product(apply(t, a), apply(t, b)) == scalar_product(a, b));
  }
}

TEST_CASE("coxeter: reflections") {
  const Quaternion p = canonical_p();
  Transform r = reflection(p);
  CHECK(apply(r, p) == -p);
  CHECK(apply(r, qmul(e1, p)) == qmul(e1, p));
  CHECK(compose(r, r) == Transform::identity());
}

TEST_CASE("coxeter: group orders") {
  CHECK(wh4().order() == 14400);
  CHECK(wd4c3().order() == 576);
  CHECK(generate(wh4().generators).elements == wh4().elements);
  CHECK(generate(wd4c3().generators).elements == wd4c3().elements);

  auto h3 = stabilizer(wh4(), one);
  CHECK(h3.order() == 120);
  // W(H3)xC2 preserves the pair {1, -1}; its elements fixing 1 form W(H3).
  auto h3c2 = build_group(GroupSpec::wh3xc2(one));
  CHECK(h3c2.order() == 240);
  CHECK(orbit(h3c2, one) == canonical({one, -one}));
  CHECK(stabilizer(h3c2, one).elements == h3.elements);

  auto s4 = build_group(GroupSpec::s4(c1()));
  CHECK(s4.order() == 24);
  CHECK(s4.elements == stabilizer(wd4c3(), c1()).elements);

  auto s3 = build_group(GroupSpec::s3(canonical_p()));
  CHECK(s3.order() == 6);
  CHECK(s3.elements == stabilizer(wd4c3(), canonical_p()).elements);

  auto a4 = build_group(GroupSpec::a4xc2(one));
  CHECK(a4.order() == 24);
  CHECK(a4.elements == stabilizer(wd4c3(), one).elements);

  const Quaternion other = half(-1, 1, 1, 1);
  auto a4b = build_group(GroupSpec::a4xc2(other));
  CHECK(a4b.elements == stabilizer(wd4c3(), other).elements);

  const Quaternion q = qmul(half(1, 1, 1, 1), canonical_p());
  auto s3q = build_group(GroupSpec::s3(q));
  CHECK(s3q.order() == 6);
  CHECK(s3q.elements == stabilizer(wd4c3(), q).elements);

  CHECK_THROWS_AS(build_group(GroupSpec::s4(one)), BadParameter);
  CHECK_THROWS_AS(build_group(GroupSpec::s3(one)), BadParameter);
  CHECK_THROWS_AS(build_group(GroupSpec::a4xc2(canonical_p())), BadParameter);
}

TEST_CASE("coxeter: orbits and orbit-stabilizer") {
  const Quaternion p = canonical_p();
  CHECK(orbit(wd4c3(), one) == binary_tetrahedral().elements);
  VertexSet snub = set_difference(binary_icosahedral().elements,
                                  binary_tetrahedral().elements);
  CHECK(orbit(wd4c3(), p) == snub);
  CHECK(orbit(wh4(), one) == binary_icosahedral().elements);
  CHECK(orbit(wd4c3(), c1()) == t_prime());
  for (const auto &v : {one, p, c1(), half(1, 1, 0, 0)})
    check_orbit_stabilizer(wd4c3(), v);
  check_orbit_stabilizer(wh4(), one);
  check_orbit_stabilizer(wh4(), p + one);
}

TEST_CASE("coxeter: orbit decomposition") {
  auto parts = orbit_decompose(wd4c3(), binary_icosahedral().elements);
  CHECK(parts.sizes == std::vector<std::size_t>{24, 96});
  CHECK(orbit_decompose(wd4c3(), binary_tetrahedral().elements).sizes ==
        std::vector<std::size_t>{24});
  CHECK_THROWS_AS(orbit_decompose(wd4c3(), VertexSet{one}), NotInvariant);
}

TEST_CASE("coxeter: conjugates of W(D4):C3 inside W(H4)") {
  const Quaternion p = canonical_p();
  for (unsigned ij : {0u, 1u}) {
    Transform h(qpow(p, ij), qpow(qconj(p), ij), false);
    auto g = conjugate(wd4c3(), h);
    CHECK(g.order() == 576);
    bool inside = true;
    for (const auto &x : g.elements)
      inside = inside && wh4().contains(x);
    CHECK(inside);
    CHECK(generate(g.generators).elements == g.elements);
  }
  Transform h(p, qconj(p), false);
  CHECK(conjugate(wd4c3(), h).elements != wd4c3().elements);
}

TEST_CASE("coxeter: transporter") {
  const Quaternion p = canonical_p();
  const Quaternion q = qmul(e1, p);
  Transform g = transporter(wd4c3(), p, q);
  CHECK(apply(g, p) == q);
  CHECK_THROWS_AS(transporter(wd4c3(), p, one), BadParameter);
}

TEST_CASE("coxeter: results do not depend on the thread count") {
  const unsigned saved = thread_count();
  set_thread_count(1);
  auto a = generate(wd4c3().generators).elements;
  auto oa = orbit(wh4(), canonical_p() + one);
  set_thread_count(4);
  auto b = generate(wd4c3().generators).elements;
  auto ob = orbit(wh4(), canonical_p() + one);
  set_thread_count(saved);
  CHECK(a == b);
  CHECK(oa == ob);
}
