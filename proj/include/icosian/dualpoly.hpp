#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "icosian/polytope.hpp"
#include "icosian/quaternion.hpp"

namespace icosian {

/// tau^2 / (2 sqrt2): every dual vertex d of a cell satisfies (d, v) = kappa
/// for the cell's vertices v, and every vertex of the dual cell at p
/// satisfies (p, d) = kappa.
FieldElement dual_offset();

struct DualFace {
  std::vector<std::size_t> cycle; // dual vertex indices in boundary order
  bool kite = false;
  Edge snub_edge; // the snub 24-cell edge this face is dual to
};

struct DualCell {
  Quaternion base_vertex;
  std::vector<std::size_t> vertex_indices; // sorted
  std::vector<std::size_t> face_indices;   // into DualComplex::faces
};

struct DualComplex {
  VertexSet vertices;               // 144, canonical
  std::vector<Edge> edges;          // 480
  std::vector<DualFace> faces;      // 432
  std::vector<DualCell> cells;      // 96, in snub vertex order
  std::vector<std::size_t> dual_of; // snub cell k -> dual vertex index
};

/// kappa * normal for every cell of the snub 24-cell: T', S' and
/// (tau / sqrt2) T.
VertexSet dual_vertices();

/// The dual complex, built by reversing the incidences of the snub census.
/// Throws CoplanarityFailed if a dual cell leaves its hyperplane.
const DualComplex &dual_complex();

/// The named vertices of the dual cell at the canonical p, in the order
/// (tau/sqrt2) 1, (tau/sqrt2) t1, (tau/sqrt2) t2, c1, c2, c3, c4, c5.
std::array<Quaternion, 8> canonical_dual_cell_vertices();

/// Kites and triangles of the dual cell at p from the printed recipes, in
/// terms of canonical_dual_cell_vertices() positions.
std::vector<std::vector<std::size_t>> printed_kites();
std::vector<std::vector<std::size_t>> printed_triangles();

/// Index into dual_complex().cells of the cell at p.
std::size_t dual_cell_index(const Quaternion &p);

/// 3D coordinates (x, e_k p) of the dual cell vertices around p.
std::vector<Vec3> dual_cell_coordinates(const Quaternion &p,
                                        const std::vector<Quaternion> &pts);

/// Squared edge lengths of a face cycle and, for kites, the squared
/// diagonals.
struct FaceMetric {
  std::vector<FieldElement> edges2;
  std::vector<FieldElement> diagonals2;
};

FaceMetric face_metric(const DualComplex &d, const DualFace &f);

struct VertexSurroundings {
  Quaternion vertex;
  std::size_t cells = 0;                  // dual cells containing it
  VertexSet tetra_apexes;                 // S4(v) orbit of c2 (for v = c1)
  VertexSet octahedron;                   // S4(v) orbit of 1
  VertexSet inner_tetrahedron;            // S4(v) orbit of {c3, c4, c5}
};

/// Neighbourhood data of a dual vertex. The S4 orbits are computed for
/// vertices of T' and are empty otherwise.
VertexSurroundings vertex_surroundings(const Quaternion &v);

/// Number of dual cells containing each dual vertex, grouped by the three
/// vertex kinds (T', S', scaled T).
struct ValenceReport {
  std::map<std::size_t, std::size_t> t_prime, s_prime, icosahedral;
  // For S' vertices: number of cells in which the vertex lies on no kite,
  // the role c2 plays in the canonical cell.
  std::map<std::size_t, std::size_t> s_prime_apex;
};

ValenceReport dual_valences();

/// The images of canonical_dual_cell_vertices() under g^k, g = [1, e1]*,
/// k = 0..3.
std::vector<std::array<Quaternion, 8>> cell_rotation_orbit();

} // namespace icosian
