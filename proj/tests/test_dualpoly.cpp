#include "doctest.h"

#include <algorithm>
#include <set>

#include "icosian/coxeter.hpp"
#include "icosian/dualpoly.hpp"
#include "icosian/errors.hpp"
#include "icosian/qgroups.hpp"

using namespace icosian;

namespace {
const FieldElement tau = FieldElement::tau();
const FieldElement sigma = FieldElement::sigma();
const FieldElement r2 = FieldElement::sqrt2();
const FieldElement r5 = FieldElement::sqrt5();
const FieldElement zero;
const FieldElement half_f(Rational(1, 2));

Vec3 v3(FieldElement a, FieldElement b, FieldElement c) { return {a, b, c}; }

std::vector<std::size_t> positions_in(const DualComplex &d,
                                      const std::array<Quaternion, 8> &named,
                                      std::vector<std::size_t> which) {
  std::vector<std::size_t> out;
  for (auto w : which)
    out.push_back(*index_of(d.vertices, named[w]));
  std::sort(out.begin(), out.end());
  return out;
}

std::multiset<std::string> squared(const std::vector<FieldElement> &xs) {
  std::multiset<std::string> out;
  for (const auto &x : xs)
    out.insert(to_string(x));
  return out;
}
} // namespace

TEST_CASE("dualpoly: dual vertices") {
  VertexSet v = dual_vertices();
  CHECK(v.size() == 144);
  const Quaternion c1 =
      (half_f * r2) * (Quaternion::one() + Quaternion::unit(1));
  CHECK(contains(v, c1));
  const FieldElement s = half_f * tau * r2;
  VertexSet unit, scaled_t;
  for (const auto &x : v)
    (norm2(x) == FieldElement(1) ? unit : scaled_t).push_back(x);
  CHECK(scaled_t == scaled(s, binary_tetrahedral().elements));
  const Cell120 &j = build_120cell();
  CHECK(unit == set_union(j.t_prime, j.s_prime));
  for (const auto &x : scaled_t)
    CHECK(norm2(x) == half_f * tau * tau);
}

TEST_CASE("dualpoly: the cell at the canonical vertex") {
  const Quaternion p = canonical_p();
  const DualComplex &d = dual_complex();
  const DualCell &cell = d.cells[dual_cell_index(p)];
  const auto named = canonical_dual_cell_vertices();
  CHECK(cell.vertex_indices ==
        positions_in(d, named, {0, 1, 2, 3, 4, 5, 6, 7}));
  for (const auto &x : named)
    CHECK(scalar_product(p, x) == dual_offset());
  // tau q0 + q1 + sigma q3 = tau^2 / sqrt2.
  for (const auto &x : named)
    CHECK(tau * x[0] + x[1] + sigma * x[3] == half_f * tau * tau * r2);

  auto coords = dual_cell_coordinates(p, {named.begin(), named.end()});
  const FieldElement k = FieldElement(2) * r2;
  std::vector<Vec3> printed = {
      v3(-tau, 0, 1),          v3(0, -1, -tau),     v3(1, tau, 0),
      v3(-sigma, sigma, -sigma), v3(sigma, -sigma, sigma),
      v3(sigma * sigma, 0, 1), v3(1, -sigma * sigma, 0),
      v3(0, -1, sigma * sigma)};
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(v3(k * coords[i][0], k * coords[i][1], k * coords[i][2]) ==
          printed[i]);

  std::set<std::vector<std::size_t>> kites, triangles;
  for (auto f : cell.face_indices) {
    std::vector<std::size_t> vs = d.faces[f].cycle;
    std::sort(vs.begin(), vs.end());
    (d.faces[f].kite ? kites : triangles).insert(vs);
  }
  CHECK(cell.face_indices.size() == 9);
  std::set<std::vector<std::size_t>> want_k, want_t;
  for (const auto &k4 : printed_kites())
    want_k.insert(positions_in(d, named, k4));
  for (const auto &t3 : printed_triangles())
    want_t.insert(positions_in(d, named, t3));
  CHECK(kites == want_k);
  CHECK(triangles == want_t);
}

TEST_CASE("dualpoly: census and face metrics") {
  const DualComplex &d = dual_complex();
  CHECK(d.vertices.size() == 144);
  CHECK(d.edges.size() == 480);
  CHECK(d.faces.size() == 432);
  CHECK(d.cells.size() == 96);
  std::size_t kites = 0;
  for (const auto &f : d.faces)
    kites += f.kite;
  CHECK(kites == 144);
  CHECK(144 - 480 + 432 - 96 == 0);

  // Every face is in exactly two cells.
  std::vector<int> per_face(d.faces.size(), 0);
  for (const auto &c : d.cells) {
    CHECK(c.vertex_indices.size() == 8);
    for (auto f : c.face_indices)
      ++per_face[f];
  }
  CHECK(std::all_of(per_face.begin(), per_face.end(),
                    [](int n) { return n == 2; }));

  const FieldElement h(Rational(1, 2));
  const auto s4 = sigma * sigma * sigma * sigma;
  for (const auto &f : d.faces) {
    FaceMetric m = face_metric(d, f);
    if (f.kite) {
      CHECK(squared(m.edges2) ==
            squared({h, h, h * s4, h * s4}));
      // Short diagonal sigma^2/2; the long one, from the printed
      // coordinates of c1 and (tau/sqrt2) 1, is 1 + sigma/2.
      CHECK(squared(m.diagonals2) ==
            squared({h * sigma * sigma, FieldElement(1) + h * sigma}));
    } else {
      // Legs 1/sqrt2, base tau/sqrt2.
      CHECK(squared(m.edges2) == squared({h, h, h * tau * tau}));
    }
    // Edges of a face are dual edges.
    for (std::size_t i = 0; i < f.cycle.size(); ++i) {
      std::size_t a = f.cycle[i], b = f.cycle[(i + 1) % f.cycle.size()];
      CHECK(std::binary_search(d.edges.begin(), d.edges.end(),
                               Edge{std::min(a, b), std::max(a, b)}));
    }
  }
}

TEST_CASE("dualpoly: cell transitivity") {
  const DualComplex &d = dual_complex();
  const auto w = build_group(GroupSpec::wd4c3());
  const auto named = canonical_dual_cell_vertices();
  std::set<std::vector<std::size_t>> images;
  for (const auto &g : w.elements) {
    std::vector<std::size_t> idx;
    for (const auto &x : named) {
      auto i = index_of(d.vertices, apply(g, x));
      REQUIRE(i.has_value());
      idx.push_back(*i);
    }
    std::sort(idx.begin(), idx.end());
    images.insert(idx);
  }
  std::set<std::vector<std::size_t>> cells;
  for (const auto &c : d.cells)
    cells.insert(c.vertex_indices);
  CHECK(images == cells);
}

TEST_CASE("dualpoly: S3 symmetry of the canonical cell") {
  const auto named = canonical_dual_cell_vertices();
  auto s3 = build_group(GroupSpec::s3(canonical_p()));
  for (const auto &g : s3.elements) {
    CHECK(apply(g, named[3]) == named[3]);
    CHECK(apply(g, named[4]) == named[4]);
  }
  for (auto triple : {std::vector<std::size_t>{0, 1, 2}, {5, 6, 7}}) {
    VertexSet t;
    for (auto i : triple)
      t.push_back(named[i]);
    t = canonical(t);
    CHECK(orbit(s3, t.front()) == t);
  }
}

TEST_CASE("dualpoly: surroundings of c1 and valences") {
  const auto named = canonical_dual_cell_vertices();
  const Quaternion c1 = named[3];
  VertexSurroundings s = vertex_surroundings(c1);
  CHECK(s.cells == 4);

  // The c2-type apexes, compared projectively with the printed forms.
  const FieldElement m = -sigma;
  std::vector<Quaternion> printed37 = {
      {r5, -sigma, zero, -tau}, {m, r5, tau, zero},
      {r5, -sigma, zero, tau},  {m, r5, -tau, zero}};
  CHECK(ray_set(s.tetra_apexes) == ray_set(canonical(printed37)));
  // Printed with 1/sqrt2, the points have norm 4; with 1/(2 sqrt2) they are
  // unit like every other S' vertex.
  for (const auto &x : printed37)
    CHECK(norm2((half_f * r2) * x) == FieldElement(4));
  CHECK(s.tetra_apexes == scaled(Rational(1, 4) * r2, canonical(printed37)));

  const Quaternion t1 = half(1, 1, -1, -1), t2 = half(1, 1, 1, -1);
  const Quaternion s1 = half(1, 1, -1, 1), s2 = half(1, -1, -1, -1);
  // The sixth point is the conjugate of s2: s2 itself is orthogonal to c1,
  // while the octahedron lies on (c1, x) = 1/sqrt2.
  CHECK(scalar_product(c1, s2) == zero);
  CHECK(s.octahedron == canonical({Quaternion::one(), t1, t2,
                                   Quaternion::unit(1), s1, qconj(s2)}));
  for (const auto &x : s.octahedron)
    CHECK(scalar_product(c1, x) == half_f * r2);
  const Quaternion c6 =
      (Rational(1, 4) * r2) * Quaternion{tau, r5, zero, -sigma};
  CHECK(s.inner_tetrahedron ==
        canonical({named[5], named[6], named[7], c6}));

  // Another T' vertex gets the same picture.
  VertexSurroundings other = vertex_surroundings(t_prime().back());
  CHECK(other.cells == 4);
  CHECK(other.tetra_apexes.size() == 4);
  CHECK(other.octahedron.size() == 6);

  ValenceReport r = dual_valences();
  CHECK(r.t_prime == std::map<std::size_t, std::size_t>{{4, 24}});
  CHECK(r.s_prime == std::map<std::size_t, std::size_t>{{4, 96}});
  CHECK(r.s_prime_apex == std::map<std::size_t, std::size_t>{{1, 96}});
  CHECK(r.icosahedral == std::map<std::size_t, std::size_t>{{12, 24}});
  CHECK(vertex_surroundings(named[0]).cells == 12);
  CHECK_THROWS_AS(vertex_surroundings(Quaternion::one()), BadParameter);
}

TEST_CASE("dualpoly: rotation of the cell about c1") {
  auto cols = cell_rotation_orbit();
  REQUIRE(cols.size() == 4);
  const auto named = canonical_dual_cell_vertices();
  const FieldElement k = Rational(1, 4) * r2;
  const FieldElement s = half_f * tau * r2;
  const Quaternion c6 = k * Quaternion{tau, r5, zero, -sigma};
  const Quaternion &c3 = named[5], &c4 = named[6], &c5 = named[7];
  const Quaternion t1 = half(1, 1, -1, -1), t2 = half(1, 1, 1, -1);
  const Quaternion s1 = half(1, 1, -1, 1), s2 = qconj(half(1, -1, -1, -1));
  const Quaternion e1 = Quaternion::unit(1), one = Quaternion::one();
  const FieldElement m = -sigma;
  const std::array<Quaternion, 4> c2 = {
      k * Quaternion{r5, -sigma, zero, -tau}, k * Quaternion{m, r5, tau, zero},
      k * Quaternion{r5, -sigma, zero, tau}, k * Quaternion{m, r5, -tau, zero}};
  // Columns: the tau/sqrt2 triple, the c-triple, then c2.
  const std::array<std::array<Quaternion, 3>, 4> ico = {
      {{one, t1, t2}, {e1, t2, s2}, {one, s2, s1}, {e1, s1, t1}}};
  const std::array<std::array<Quaternion, 3>, 4> tet = {
      {{c3, c4, c5}, {c6, c3, c4}, {c5, c6, c3}, {c4, c5, c6}}};
  for (std::size_t col = 0; col < 4; ++col) {
    CHECK(cols[col][3] == named[3]);
    for (std::size_t r = 0; r < 3; ++r) {
      CHECK(cols[col][r] == s * ico[col][r]);
      CHECK(cols[col][5 + r] == tet[col][r]);
    }
    CHECK(cols[col][4] == c2[col]);
  }
}
