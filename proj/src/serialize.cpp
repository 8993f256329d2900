#include "icosian/serialize.hpp"

#include "icosian/errors.hpp"

namespace icosian {

namespace {

Json index_lists(const auto &lists) {
  Json out = Json::array();
  for (const auto &l : lists)
    out.push_back(Json(std::vector<std::size_t>(l.begin(), l.end())));
  return out;
}

Json vec3_json(const Vec3 &v) {
  return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

Mesh hull_mesh(std::vector<Vec3> coords) {
  Mesh m;
  m.faces = convex_hull_3d(coords);
  m.vertices = std::move(coords);
  return m;
}

} // namespace

Json to_json(const FieldElement &x) {
  Json out = Json::array();
  for (const auto &c : x.coeffs())
    out.push_back(c.str());
  return out;
}

Json to_json(const Quaternion &q) {
  Json out = Json::array();
  for (std::size_t i = 0; i < 4; ++i)
    out.push_back(to_json(q[i]));
  return out;
}

Json to_json(const VertexSet &v) {
  Json out = Json::array();
  for (const auto &q : v)
    out.push_back(to_json(q));
  return out;
}

Json to_json(const Transform &t) {
  return {{"left", to_json(t.left())},
          {"right", to_json(t.right())},
          {"star", t.star()}};
}

Json to_json(const TransformGroup &g, bool with_elements) {
  Json out = {{"label", g.label}, {"order", g.order()}};
  Json gens = Json::array();
  for (const auto &t : g.generators)
    gens.push_back(to_json(t));
  out["generators"] = gens;
  if (with_elements) {
    Json els = Json::array();
    for (const auto &t : g.elements)
      els.push_back(to_json(t));
    out["elements"] = els;
  }
  return out;
}

Json to_json(const ConjugacyClassTable &table) {
  Json out = Json::array();
  for (const auto &c : table.classes)
    out.push_back({{"label", icosahedral_class_label(c)},
                   {"size", c.size()},
                   {"order", c.element_order},
                   {"representative", to_json(c.members.front())}});
  return out;
}

Json to_json(const OrbitPartition &p) {
  Json reps = Json::array();
  for (const auto &s : p.suborbits)
    reps.push_back(to_json(s.front()));
  return {{"sizes", p.sizes}, {"representatives", reps}};
}

Json to_json(const PolytopeComplex &c) {
  Json cells = Json::array();
  for (const auto &cell : c.cells)
    cells.push_back({{"vertices", cell.vertex_indices},
                     {"kind", to_string(cell.kind)},
                     {"normal", to_json(cell.normal)},
                     {"offset", to_json(cell.offset)}});
  return {{"counts",
           {{"vertices", c.vertices.size()},
            {"edges", c.edges.size()},
            {"faces", c.faces.size()},
            {"cells", c.cells.size()}}},
          {"vertices", to_json(c.vertices)},
          {"edges", index_lists(c.edges)},
          {"faces", index_lists(c.faces)},
          {"cells", cells}};
}

Json to_json(const DualComplex &d) {
  Json faces = Json::array();
  for (const auto &f : d.faces)
    faces.push_back({{"cycle", f.cycle},
                     {"kind", f.kite ? "kite" : "triangle"},
                     {"dual_to_edge", index_lists(std::vector{f.snub_edge})[0]}});
  Json cells = Json::array();
  for (const auto &c : d.cells)
    cells.push_back({{"base_vertex", to_json(c.base_vertex)},
                     {"vertices", c.vertex_indices},
                     {"faces", c.face_indices}});
  return {{"counts",
           {{"vertices", d.vertices.size()},
            {"edges", d.edges.size()},
            {"faces", d.faces.size()},
            {"cells", d.cells.size()}}},
          {"vertices", to_json(d.vertices)},
          {"edges", index_lists(d.edges)},
          {"faces", faces},
          {"cells", cells}};
}

Json to_json(const WeightOrbitReport &r) {
  return {{"mask", mask_string(r.mask)},
          {"orbit_size", r.orbit_size},
          {"decomposition", r.decomposition},
          {"text", format_decomposition(r.orbit_size, r.decomposition)},
          {"orbit_stabilizer_ok", r.orbit_stabilizer_ok}};
}

FieldElement field_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("field element must be an array of four rationals");
  std::array<Rational, 4> c;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_string())
      throw ParseError("rational must be a \"num/den\" string");
    c[i] = Rational::parse(j[i].get<std::string>());
  }
  return {c[0], c[1], c[2], c[3]};
}

Quaternion quaternion_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("quaternion must be an array of four field elements");
  return {field_from_json(j[0]), field_from_json(j[1]), field_from_json(j[2]),
          field_from_json(j[3])};
}

VertexSet vertex_set_from_json(const Json &j) {
  if (!j.is_array())
    throw ParseError("vertex set must be an array");
  std::vector<Quaternion> out;
  for (const auto &q : j)
    out.push_back(quaternion_from_json(q));
  return canonical(std::move(out));
}

Mesh cell_mesh(const PolytopeComplex &c, std::size_t k) {
  if (k >= c.cells.size())
    throw InvalidSelector("cell index out of range");
  const Cell &cell = c.cells[k];
  const Quaternion axis = cell.center.value_or(cell.normal);
  std::vector<Vec3> coords;
  for (auto i : cell.vertex_indices)
    coords.push_back(coordinates_around(axis, c.vertices[i]));
  return hull_mesh(std::move(coords));
}

Mesh vertex_figure_mesh(const Quaternion &p) {
  VertexFigure f = vertex_figure(p);
  return {std::move(f.coords), std::move(f.faces)};
}

Mesh dual_cell_mesh(const Quaternion &p) {
  const DualComplex &d = dual_complex();
  const DualCell &cell = d.cells[dual_cell_index(p)];
  std::vector<Vec3> coords;
  for (auto i : cell.vertex_indices)
    coords.push_back(coordinates_around(p, d.vertices[i]));
  return hull_mesh(std::move(coords));
}

void write_off(std::ostream &out, const Mesh &mesh, int digits) {
  // Closed surface: every edge borders two faces.
  std::size_t sides = 0;
  for (const auto &f : mesh.faces)
    sides += f.size();
  out << "OFF\n"
      << mesh.vertices.size() << ' ' << mesh.faces.size() << ' ' << sides / 2
      << '\n';
  for (const auto &v : mesh.vertices)
    out << to_decimal(v[0], digits) << ' ' << to_decimal(v[1], digits) << ' '
        << to_decimal(v[2], digits) << '\n';
  for (const auto &f : mesh.faces) {
    out << f.size();
    for (auto i : f)
      out << ' ' << i;
    out << '\n';
  }
}

Json to_json(const Mesh &mesh) {
  Json vs = Json::array();
  for (const auto &v : mesh.vertices)
    vs.push_back(vec3_json(v));
  return {{"vertices", vs}, {"faces", index_lists(mesh.faces)}};
}

} // namespace icosian
