#include "icosian/dualpoly.hpp"

#include <algorithm>

#include "icosian/coxeter.hpp"
#include "icosian/errors.hpp"
#include "icosian/qgroups.hpp"

namespace icosian {

namespace {

const FieldElement kTau = FieldElement::tau();
const FieldElement kSigma = FieldElement::sigma();
const FieldElement kRoot2 = FieldElement::sqrt2();

std::vector<std::size_t> intersect(const std::vector<std::size_t> &a,
                                   const std::vector<std::size_t> &b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Edge sorted_edge(std::size_t a, std::size_t b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Chains undirected edges into one closed cycle.
std::vector<std::size_t> chain_cycle(const std::vector<Edge> &edges) {
  std::vector<std::size_t> cycle{edges.front()[0], edges.front()[1]};
  std::vector<char> used(edges.size(), 0);
  used[0] = 1;
  while (cycle.size() < edges.size()) {
    bool extended = false;
    for (std::size_t k = 0; k < edges.size() && !extended; ++k) {
      if (used[k])
        continue;
      const auto &[a, b] = edges[k];
      if (a == cycle.back() || b == cycle.back()) {
        cycle.push_back(a == cycle.back() ? b : a);
        used[k] = 1;
        extended = true;
      }
    }
    if (!extended)
      throw CertificationFailed("dual face boundary is not a cycle");
  }
  return cycle;
}

const TransformGroup &wd4c3() {
  static const TransformGroup g = build_group(GroupSpec::wd4c3());
  return g;
}

Quaternion c1() {
  return (Rational(1, 2) * kRoot2) * (Quaternion::one() + Quaternion::unit(1));
}

} // namespace

FieldElement dual_offset() { return Rational(1, 4) * kTau * kTau * kRoot2; }

const DualComplex &dual_complex() {
  static const DualComplex dual = [] {
    const PolytopeComplex &snub = snub24_complex();
    const FieldElement kappa = dual_offset();
    DualComplex d;

    std::vector<Quaternion> pts;
    for (const auto &cell : snub.cells)
      pts.push_back(kappa * cell.normal);
    d.vertices = canonical(pts);
    if (d.vertices.size() != snub.cells.size())
      throw CertificationFailed("two snub cells share a dual vertex");
    for (const auto &x : pts)
      d.dual_of.push_back(*index_of(d.vertices, x));

    // Cells of the snub complex containing each snub vertex.
    std::vector<std::vector<std::size_t>> around(snub.vertices.size());
    for (std::size_t k = 0; k < snub.cells.size(); ++k)
      for (auto v : snub.cells[k].vertex_indices)
        around[v].push_back(k);

    // Dual edges come from snub triangles (two cells each).
    for (const auto &[a, b, c] : snub.faces) {
      auto cells = intersect(intersect(around[a], around[b]), around[c]);
      if (cells.size() != 2)
        throw CertificationFailed("snub triangle not shared by two cells");
      d.edges.push_back(sorted_edge(d.dual_of[cells[0]], d.dual_of[cells[1]]));
    }
    std::sort(d.edges.begin(), d.edges.end());

    // Dual faces come from snub edges; their boundary edges come from the
    // snub triangles on that edge.
    for (const auto &[a, b] : snub.edges) {
      std::vector<Edge> boundary;
      for (const auto &tri : snub.faces) {
        if (std::find(tri.begin(), tri.end(), a) == tri.end() ||
            std::find(tri.begin(), tri.end(), b) == tri.end())
          continue;
        std::size_t c = tri[0] + tri[1] + tri[2] - a - b;
        auto cells = intersect(intersect(around[a], around[b]), around[c]);
        boundary.push_back(
            sorted_edge(d.dual_of[cells[0]], d.dual_of[cells[1]]));
      }
      DualFace f;
      f.cycle = chain_cycle(boundary);
      f.kite = f.cycle.size() == 4;
      f.snub_edge = {a, b};
      d.faces.push_back(std::move(f));
    }

    for (std::size_t v = 0; v < snub.vertices.size(); ++v) {
      DualCell cell;
      cell.base_vertex = snub.vertices[v];
      for (auto k : around[v]) {
        const std::size_t dv = d.dual_of[k];
        if (scalar_product(cell.base_vertex, d.vertices[dv]) != kappa)
          throw CoplanarityFailed("dual vertex off the hyperplane of its cell");
        cell.vertex_indices.push_back(dv);
      }
      std::sort(cell.vertex_indices.begin(), cell.vertex_indices.end());
      for (std::size_t f = 0; f < d.faces.size(); ++f)
        if (d.faces[f].snub_edge[0] == v || d.faces[f].snub_edge[1] == v)
          cell.face_indices.push_back(f);
      d.cells.push_back(std::move(cell));
    }
    return d;
  }();
  return dual;
}

VertexSet dual_vertices() { return dual_complex().vertices; }

std::array<Quaternion, 8> canonical_dual_cell_vertices() {
  const FieldElement zero;
  const FieldElement k = Rational(1, 4) * kRoot2; // 1 / (2 sqrt2)
  const FieldElement s = Rational(1, 2) * kTau * kRoot2; // tau / sqrt2
  const FieldElement r5 = FieldElement::sqrt5();
  return {s * Quaternion::one(),
          s * half(1, 1, -1, -1),
          s * half(1, 1, 1, -1),
          c1(),
          k * Quaternion{r5, -kSigma, zero, -kTau},
          k * Quaternion{r5, kTau, -kSigma, zero},
          k * Quaternion{kTau, r5, zero, kSigma},
          k * Quaternion{r5, kTau, kSigma, zero}};
}

std::vector<std::vector<std::size_t>> printed_kites() {
  return {{3, 5, 7, 0}, {3, 6, 7, 1}, {3, 5, 6, 2}};
}

std::vector<std::vector<std::size_t>> printed_triangles() {
  return {{4, 0, 1}, {4, 1, 2}, {4, 2, 0}, {7, 0, 1}, {6, 1, 2}, {5, 2, 0}};
}

std::size_t dual_cell_index(const Quaternion &p) {
  auto idx = index_of(snub24_complex().vertices, p);
  if (!idx)
    throw BadParameter("vertex is not in the snub 24-cell");
  return *idx;
}

std::vector<Vec3> dual_cell_coordinates(const Quaternion &p,
                                        const std::vector<Quaternion> &pts) {
  std::vector<Vec3> out;
  for (const auto &x : pts)
    out.push_back(coordinates_around(p, x));
  return out;
}

FaceMetric face_metric(const DualComplex &d, const DualFace &f) {
  FaceMetric m;
  const std::size_t n = f.cycle.size();
  for (std::size_t i = 0; i < n; ++i)
    m.edges2.push_back(
        norm2(d.vertices[f.cycle[i]] - d.vertices[f.cycle[(i + 1) % n]]));
  if (n == 4)
    for (std::size_t i = 0; i < 2; ++i)
      m.diagonals2.push_back(
          norm2(d.vertices[f.cycle[i]] - d.vertices[f.cycle[i + 2]]));
  return m;
}

VertexSurroundings vertex_surroundings(const Quaternion &v) {
  const DualComplex &d = dual_complex();
  auto idx = index_of(d.vertices, v);
  if (!idx)
    throw BadParameter("not a vertex of the dual snub 24-cell");
  VertexSurroundings s;
  s.vertex = v;
  for (const auto &cell : d.cells)
    s.cells += std::binary_search(cell.vertex_indices.begin(),
                                  cell.vertex_indices.end(), *idx);
  if (!contains(t_prime(), v))
    return s;
  // Move the canonical configuration around c1 onto v.
  const Transform h = transporter(wd4c3(), c1(), v);
  const TransformGroup s4 = build_group(GroupSpec::s4(v));
  const auto named = canonical_dual_cell_vertices();
  auto orbit_of = [&](std::initializer_list<std::size_t> which) {
    std::vector<Quaternion> out;
    for (auto w : which) {
      const Quaternion x = apply(h, named[w]);
      for (const auto &g : s4.elements)
        out.push_back(apply(g, x));
    }
    return canonical(std::move(out));
  };
  s.tetra_apexes = orbit_of({4});
  s.inner_tetrahedron = orbit_of({5, 6, 7});
  const FieldElement inv = invert(Rational(1, 2) * kTau * kRoot2);
  for (const auto &x : orbit_of({0}))
    s.octahedron.push_back(inv * x);
  s.octahedron = canonical(s.octahedron);
  return s;
}

ValenceReport dual_valences() {
  const DualComplex &d = dual_complex();
  std::vector<std::size_t> count(d.vertices.size(), 0);
  std::vector<std::size_t> apex(d.vertices.size(), 0);
  for (const auto &cell : d.cells) {
    std::vector<char> on_kite(d.vertices.size(), 0);
    for (auto f : cell.face_indices)
      if (d.faces[f].kite)
        for (auto v : d.faces[f].cycle)
          on_kite[v] = 1;
    for (auto v : cell.vertex_indices) {
      ++count[v];
      apex[v] += !on_kite[v];
    }
  }
  const VertexSet tp = t_prime();
  ValenceReport r;
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    const Quaternion &x = d.vertices[v];
    if (norm2(x) != FieldElement(1))
      ++r.icosahedral[count[v]];
    else if (contains(tp, x))
      ++r.t_prime[count[v]];
    else {
      ++r.s_prime[count[v]];
      ++r.s_prime_apex[apex[v]];
    }
  }
  return r;
}

std::vector<std::array<Quaternion, 8>> cell_rotation_orbit() {
  const Transform g(Quaternion::one(), Quaternion::unit(1), true);
  std::vector<std::array<Quaternion, 8>> out{canonical_dual_cell_vertices()};
  for (int k = 1; k < 4; ++k) {
    auto next = out.back();
    for (auto &x : next)
      x = apply(g, x);
    out.push_back(next);
  }
  return out;
}

} // namespace icosian
