#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icosian/quaternion.hpp"

namespace icosian {

using Edge = std::array<std::size_t, 2>;
using Triangle = std::array<std::size_t, 3>;
using Vec3 = std::array<FieldElement, 3>;

enum class CellKind { Tetrahedron, Octahedron, Icosahedron };

std::string to_string(CellKind kind);

/// A certified cell: (normal, v) == offset on the cell vertices and
/// (normal, u) < offset on every other vertex. The offset is always 1.
struct Cell {
  std::vector<std::size_t> vertex_indices; // sorted
  CellKind kind = CellKind::Tetrahedron;
  Quaternion normal;
  FieldElement offset{1};
  /// Unit vector along the normal, when its length lies in the field.
  std::optional<Quaternion> center;
};

struct PolytopeComplex {
  VertexSet vertices;
  std::vector<Edge> edges;      // sorted, i < j
  std::vector<Triangle> faces;  // sorted, i < j < k
  std::vector<Cell> cells;      // sorted by vertex indices
};

/// S = I - T.
VertexSet snub24_vertices();

/// Nearest-neighbour pairs of a vertex set on a common sphere. Throws
/// DegenerateInput on fewer than two points or unequal norms.
std::vector<Edge> edge_graph(const VertexSet &v);

/// All 3-cliques of the edge graph.
std::vector<Triangle> triangle_faces(const VertexSet &v,
                                     const std::vector<Edge> &edges);

/// Supporting hyperplane of the given vertices, if one exists: the normal
/// is solved from four independent members and checked against every point.
std::optional<Cell> certify_cell(const VertexSet &v,
                                 std::vector<std::size_t> indices,
                                 CellKind kind);

/// The icosahedral cell t(12+) of S around t in T. Throws BadParameter if
/// t is not in T and CertificationFailed if the hyperplane test fails.
Cell icosa_cell(const Quaternion &t);

/// The tetrahedral cells of S containing p, with their unit centers.
struct TetraStar {
  std::vector<Cell> cells;
  std::vector<Quaternion> centers;
};

TetraStar tetra_cells_at(const Quaternion &p);

/// Full cell census of S (or any snub embedding I - q T conj(q)), I or T.
/// Tetrahedra come from 4-cliques, icosahedra from the 12 icosian
/// neighbours of each removed point, octahedra (24-cell) from the T'
/// directions. Throws BadParameter for other inputs.
PolytopeComplex cell_census(const VertexSet &v);

/// The cached census of S.
const PolytopeComplex &snub24_complex();

/// Cells containing each face, and a histogram of cells per edge.
struct IncidenceReport {
  std::map<std::size_t, std::size_t> cells_per_face; // count -> #faces
  std::map<std::size_t, std::size_t> cells_per_edge; // count -> #edges
  std::map<std::size_t, std::size_t> cells_per_vertex;
};

IncidenceReport incidences(const PolytopeComplex &c);

/// V - E + F - C.
long euler_characteristic(const PolytopeComplex &c);

/// Exact 3D convex hull; faces are vertex cycles ordered counterclockwise
/// seen from outside. Throws DegenerateInput if the points are coplanar.
std::vector<std::vector<std::size_t>> convex_hull_3d(const std::vector<Vec3> &pts);

/// Coordinates of x in the basis e1 b, e2 b, e3 b orthogonal to b.
Vec3 coordinates_around(const Quaternion &b, const Quaternion &x);

struct VertexFigure {
  Quaternion base;
  VertexSet neighbors;                      // canonical order
  std::vector<Vec3> coords;                 // (q, e_k p), k = 1..3
  std::vector<std::vector<std::size_t>> faces;
};

VertexFigure vertex_figure(const Quaternion &p);

/// The 600 vertices of the 120-cell as a union of W(D4):C3 orbits.
struct Cell120 {
  VertexSet vertices;
  VertexSet t_prime; // 24
  VertexSet s_prime; // 96
  VertexSet m;       // 192
  VertexSet n;       // 288
};

const Cell120 &build_120cell();

/// I - p^i T conj(p)^i, i = 0..4.
std::vector<VertexSet> snub_embeddings_in_600cell();

} // namespace icosian
