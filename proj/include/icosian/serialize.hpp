#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "icosian/coxeter.hpp"
#include "icosian/dualpoly.hpp"
#include "icosian/field.hpp"
#include "icosian/polytope.hpp"
#include "icosian/qgroups.hpp"
#include "icosian/quaternion.hpp"
#include "icosian/rootsys.hpp"

namespace icosian {

using Json = nlohmann::json;

// Exact values: a field element is ["a", "b", "c", "d"] over 1, sqrt2, sqrt5,
// sqrt10 with every entry "num/den"; a quaternion is four of those.
Json to_json(const FieldElement &x);
Json to_json(const Quaternion &q);
Json to_json(const VertexSet &v);
Json to_json(const Transform &t);
Json to_json(const TransformGroup &g, bool with_elements = false);
Json to_json(const ConjugacyClassTable &table);
Json to_json(const OrbitPartition &p);
Json to_json(const PolytopeComplex &c);
Json to_json(const DualComplex &d);
Json to_json(const WeightOrbitReport &r);

/// Inverses of the exact encoders. Throw ParseError on malformed input.
FieldElement field_from_json(const Json &j);
Quaternion quaternion_from_json(const Json &j);
VertexSet vertex_set_from_json(const Json &j);

/// A polyhedron in 3D with exact coordinates and outward-oriented faces.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<std::size_t>> faces;
};

/// Cell k of a complex in the basis e1 c, e2 c, e3 c around its center c
/// (the unnormalized normal when the center is not in the field).
Mesh cell_mesh(const PolytopeComplex &c, std::size_t k);

/// The 9-point vertex figure of the snub 24-cell at p.
Mesh vertex_figure_mesh(const Quaternion &p);

/// The dual cell at the snub vertex p, in the basis around p.
Mesh dual_cell_mesh(const Quaternion &p);

/// Standard OFF text; coordinates rendered with `digits` significant digits.
void write_off(std::ostream &out, const Mesh &mesh, int digits = 17);

Json to_json(const Mesh &mesh);

} // namespace icosian
