#include "icosian/polytope.hpp"

#include <algorithm>
#include <set>

#include "icosian/errors.hpp"
#include "icosian/parallel.hpp"
#include "icosian/qgroups.hpp"

namespace icosian {

std::string to_string(CellKind kind) {
  switch (kind) {
  case CellKind::Tetrahedron:
    return "tetrahedron";
  case CellKind::Octahedron:
    return "octahedron";
  case CellKind::Icosahedron:
    return "icosahedron";
  }
  return "unknown";
}

VertexSet snub24_vertices() {
  return set_difference(binary_icosahedral().elements,
                        binary_tetrahedral().elements);
}

std::vector<Edge> edge_graph(const VertexSet &v) {
  if (v.size() < 2)
    throw DegenerateInput("edge graph needs at least two vertices");
  const FieldElement r2 = norm2(v.front());
  for (const auto &x : v)
    if (norm2(x) != r2)
      throw DegenerateInput("vertices do not lie on one sphere");

  // Per row: the largest product below r2 and the partners achieving it.
  std::vector<std::optional<FieldElement>> best(v.size());
  std::vector<std::vector<std::size_t>> partners(v.size());
  parallel_for(v.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j == i)
        continue;
      FieldElement s = scalar_product(v[i], v[j]);
      if (compare(s, r2) >= 0)
        continue;
      int c = best[i] ? compare(s, *best[i]) : 1;
      if (c > 0) {
        best[i] = s;
        partners[i].assign(1, j);
      } else if (c == 0) {
        partners[i].push_back(j);
      }
    }
  });
  std::optional<FieldElement> global;
  for (const auto &b : best)
    if (b && (!global || compare(*b, *global) > 0))
      global = b;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (best[i] && *best[i] == *global)
      for (auto j : partners[i])
        if (i < j)
          edges.push_back({i, j});
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

std::vector<std::vector<char>> adjacency(std::size_t n,
                                         const std::vector<Edge> &edges) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto &[i, j] : edges)
    adj[i][j] = adj[j][i] = 1;
  return adj;
}

std::vector<std::array<std::size_t, 4>>
four_cliques(std::size_t n, const std::vector<Edge> &edges,
             const std::vector<Triangle> &faces) {
  auto adj = adjacency(n, edges);
  std::vector<std::array<std::size_t, 4>> out;
  for (const auto &[i, j, k] : faces)
    for (std::size_t l = k + 1; l < n; ++l)
      if (adj[i][l] && adj[j][l] && adj[k][l])
        out.push_back({i, j, k, l});
  return out;
}

} // namespace

std::vector<Triangle> triangle_faces(const VertexSet &v,
                                     const std::vector<Edge> &edges) {
  auto adj = adjacency(v.size(), edges);
  std::vector<Triangle> out;
  for (const auto &[i, j] : edges)
    for (std::size_t k = j + 1; k < v.size(); ++k)
      if (adj[i][k] && adj[j][k])
        out.push_back({i, j, k});
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Cell> certify_cell(const VertexSet &v,
                                 std::vector<std::size_t> indices,
                                 CellKind kind) {
  std::sort(indices.begin(), indices.end());
  std::vector<Quaternion> basis;
  for (auto i : indices) {
    basis.push_back(v[i]);
    if (rank(basis) < basis.size())
      basis.pop_back();
    if (basis.size() == 4)
      break;
  }
  if (basis.size() < 4)
    return std::nullopt;
  const std::vector<FieldElement> ones(4, FieldElement(1));
  auto normal = solve_scalar_products(basis, ones);
  if (!normal)
    return std::nullopt;
  std::size_t next = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int c = compare(scalar_product(*normal, v[i]), FieldElement(1));
    const bool member = next < indices.size() && indices[next] == i;
    if (member) {
      ++next;
      if (c != 0)
        return std::nullopt;
    } else if (c >= 0) {
      return std::nullopt;
    }
  }
  Cell cell;
  cell.vertex_indices = std::move(indices);
  cell.kind = kind;
  cell.normal = *normal;
  if (auto len = sqrt_exact(norm2(*normal)))
    cell.center = invert(*len) * *normal;
  return cell;
}

namespace {

// Points of `v` whose product with r equals the maximum over `v`.
std::vector<std::size_t> nearest_to(const VertexSet &v, const Quaternion &r) {
  std::vector<std::size_t> out;
  std::optional<FieldElement> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    FieldElement s = scalar_product(v[i], r);
    int c = best ? compare(s, *best) : 1;
    if (c > 0) {
      best = s;
      out.assign(1, i);
    } else if (c == 0) {
      out.push_back(i);
    }
  }
  return out;
}

Cell certify_or_throw(const VertexSet &v, std::vector<std::size_t> indices,
                      CellKind kind, const std::string &what) {
  auto cell = certify_cell(v, std::move(indices), kind);
  if (!cell)
    throw CertificationFailed(what + " has no supporting hyperplane");
  return *cell;
}

} // namespace

Cell icosa_cell(const Quaternion &t) {
  if (!binary_tetrahedral().contains(t))
    throw BadParameter("icosahedral cells are centred on elements of T");
  const VertexSet s = snub24_vertices();
  return certify_or_throw(s, nearest_to(s, t), CellKind::Icosahedron,
                          "icosahedron t(12+)");
}

PolytopeComplex cell_census(const VertexSet &v) {
  const VertexSet &i = binary_icosahedral().elements;
  const VertexSet &t = binary_tetrahedral().elements;
  const bool is_600 = v == i;
  const bool is_24 = v == t;
  const VertexSet removed = set_difference(i, v);
  const bool is_snub = !is_600 && v.size() == 96 && removed.size() == 24;
  if (!is_600 && !is_24 && !is_snub)
    throw BadParameter("cell census supports S, I, T and snub embeddings");

  PolytopeComplex c;
  c.vertices = v;
  c.edges = edge_graph(v);
  c.faces = triangle_faces(v, c.edges);

  // Tetrahedral candidates are filtered; the recipe cells must certify.
  auto quads = four_cliques(v.size(), c.edges, c.faces);
  std::vector<std::optional<Cell>> tetra(quads.size());
  parallel_for(quads.size(), [&](std::size_t k) {
    tetra[k] = certify_cell(
        v, {quads[k].begin(), quads[k].end()}, CellKind::Tetrahedron);
  });
  for (auto &cell : tetra)
    if (cell)
      c.cells.push_back(std::move(*cell));

  std::vector<Quaternion> centres;
  CellKind kind = CellKind::Icosahedron;
  if (is_snub)
    centres = removed;
  if (is_24) {
    centres = t_prime();
    kind = CellKind::Octahedron;
  }
  std::vector<Cell> recipe(centres.size());
  parallel_for(centres.size(), [&](std::size_t k) {
    recipe[k] = certify_or_throw(v, nearest_to(v, centres[k]), kind,
                                 to_string(kind) + " cell");
  });
  for (auto &cell : recipe)
    c.cells.push_back(std::move(cell));
  std::sort(c.cells.begin(), c.cells.end(), [](const Cell &a, const Cell &b) {
    return a.vertex_indices < b.vertex_indices;
  });
  return c;
}

const PolytopeComplex &snub24_complex() {
  static const PolytopeComplex c = cell_census(snub24_vertices());
  return c;
}

TetraStar tetra_cells_at(const Quaternion &p) {
  const PolytopeComplex &c = snub24_complex();
  auto idx = index_of(c.vertices, p);
  if (!idx)
    throw BadParameter("vertex is not in the snub 24-cell");
  TetraStar star;
  for (const auto &cell : c.cells)
    if (cell.kind == CellKind::Tetrahedron &&
        std::binary_search(cell.vertex_indices.begin(),
                           cell.vertex_indices.end(), *idx)) {
      star.cells.push_back(cell);
      if (!cell.center)
        throw CertificationFailed("tetrahedron centre is not a field point");
      star.centers.push_back(*cell.center);
    }
  return star;
}

IncidenceReport incidences(const PolytopeComplex &c) {
  auto count_cells = [&](auto begin, auto end) {
    std::size_t n = 0;
    for (const auto &cell : c.cells)
      if (std::includes(cell.vertex_indices.begin(), cell.vertex_indices.end(),
                        begin, end))
        ++n;
    return n;
  };
  IncidenceReport r;
  for (const auto &f : c.faces)
    ++r.cells_per_face[count_cells(f.begin(), f.end())];
  for (const auto &e : c.edges)
    ++r.cells_per_edge[count_cells(e.begin(), e.end())];
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    ++r.cells_per_vertex[count_cells(&i, &i + 1)];
  return r;
}

long euler_characteristic(const PolytopeComplex &c) {
  return static_cast<long>(c.vertices.size()) -
         static_cast<long>(c.edges.size()) +
         static_cast<long>(c.faces.size()) - static_cast<long>(c.cells.size());
}

namespace {

Vec3 sub(const Vec3 &a, const Vec3 &b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

FieldElement dot(const Vec3 &a, const Vec3 &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_zero(const Vec3 &a) {
  return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
}

} // namespace

std::vector<std::vector<std::size_t>>
convex_hull_3d(const std::vector<Vec3> &pts) {
  const std::size_t n = pts.size();
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> faces;
  bool full_dimensional = false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Vec3 normal = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
        if (is_zero(normal))
          continue;
        std::vector<std::size_t> on;
        int side = 0;
        bool supporting = true;
        for (std::size_t k = 0; k < n && supporting; ++k) {
          int s = sign(dot(normal, sub(pts[k], pts[a])));
          if (s == 0)
            on.push_back(k);
          else if (side == 0)
            side = s;
          else if (s != side)
            supporting = false;
        }
        if (side != 0)
          full_dimensional = true;
        if (!supporting || !seen.insert(on).second)
          continue;
        // Orient the normal outward: the other points lie on the negative
        // side.
        if (side > 0)
          normal = {-normal[0], -normal[1], -normal[2]};
        // Boundary edges of the face polygon, directed counterclockwise
        // about the outward normal.
        std::vector<std::size_t> next(n, n);
        for (auto u : on)
          for (auto w : on) {
            if (u == w)
              continue;
            bool left_of_all = true;
            for (auto x : on)
              if (x != u && x != w &&
                  sign(dot(normal,
                           cross(sub(pts[w], pts[u]), sub(pts[x], pts[u])))) <=
                      0)
                left_of_all = false;
            if (left_of_all)
              next[u] = w;
          }
        std::vector<std::size_t> cycle{on.front()};
        while (cycle.size() < on.size()) {
          std::size_t w = next[cycle.back()];
          if (w == n)
            throw DegenerateInput("face polygon has collinear points");
          cycle.push_back(w);
        }
        faces.push_back(std::move(cycle));
      }
  if (!full_dimensional)
    throw DegenerateInput("points are coplanar");
  std::sort(faces.begin(), faces.end());
  return faces;
}

Vec3 coordinates_around(const Quaternion &b, const Quaternion &x) {
  return {scalar_product(x, qmul(Quaternion::unit(1), b)),
          scalar_product(x, qmul(Quaternion::unit(2), b)),
          scalar_product(x, qmul(Quaternion::unit(3), b))};
}

VertexFigure vertex_figure(const Quaternion &p) {
  const PolytopeComplex &c = snub24_complex();
  auto idx = index_of(c.vertices, p);
  if (!idx)
    throw BadParameter("vertex is not in the snub 24-cell");
  VertexFigure f;
  f.base = p;
  std::vector<Quaternion> nb;
  for (const auto &[i, j] : c.edges) {
    if (i == *idx)
      nb.push_back(c.vertices[j]);
    if (j == *idx)
      nb.push_back(c.vertices[i]);
  }
  f.neighbors = canonical(std::move(nb));
  for (const auto &q : f.neighbors)
    f.coords.push_back(coordinates_around(p, q));
  f.faces = convex_hull_3d(f.coords);
  return f;
}

const Cell120 &build_120cell() {
  static const Cell120 cell = [] {
    const Quaternion p = canonical_p();
    const Quaternion pd = qconj(qgalois(p));
    const VertexSet tp = t_prime();
    auto translate = [&](const Quaternion &a) {
      std::vector<Quaternion> out;
      for (const auto &x : tp)
        out.push_back(qmul(a, x));
      return out;
    };
    std::vector<Quaternion> s, m, n;
    for (unsigned i = 1; i <= 4; ++i) {
      for (auto &&x : translate(qmul(qpow(p, i), qpow(pd, i))))
        s.push_back(x);
      for (auto &&x : translate(qpow(p, i)))
        m.push_back(x);
      for (auto &&x : translate(qpow(pd, i)))
        m.push_back(x);
      for (unsigned j = 1; j <= 4; ++j)
        if (i != j)
          for (auto &&x : translate(qmul(qpow(p, i), qpow(pd, j))))
            n.push_back(x);
    }
    Cell120 c;
    c.t_prime = tp;
    c.s_prime = canonical(std::move(s));
    c.m = canonical(std::move(m));
    c.n = canonical(std::move(n));
    c.vertices =
        set_union(set_union(c.t_prime, c.s_prime), set_union(c.m, c.n));
    return c;
  }();
  return cell;
}

std::vector<VertexSet> snub_embeddings_in_600cell() {
  const Quaternion p = canonical_p();
  std::vector<VertexSet> out;
  for (unsigned i = 0; i < 5; ++i) {
    const Quaternion a = qpow(p, i);
    std::vector<Quaternion> copy;
    for (const auto &t : binary_tetrahedral().elements)
      copy.push_back(qmul(qmul(a, t), qconj(a)));
    out.push_back(
        set_difference(binary_icosahedral().elements, canonical(copy)));
  }
  return out;
}

} // namespace icosian
