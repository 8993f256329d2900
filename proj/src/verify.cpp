#include "icosian/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "icosian/coxeter.hpp"
#include "icosian/dualpoly.hpp"
#include "icosian/errors.hpp"
#include "icosian/polytope.hpp"
#include "icosian/qgroups.hpp"
#include "icosian/reference.hpp"
#include "icosian/rootsys.hpp"

namespace icosian {

namespace {

const FieldElement kTau = FieldElement::tau();
const FieldElement kSigma = FieldElement::sigma();
const FieldElement kRoot2 = FieldElement::sqrt2();
const FieldElement kHalf(Rational(1, 2));

std::string text(std::size_t n) { return std::to_string(n); }

std::string text(const Rational &q) {
  std::string s = q.str();
  if (s.size() > 2 && s.ends_with("/1"))
    s.resize(s.size() - 2);
  return s;
}

template <class K, class V> std::string text(const std::map<K, V> &m) {
  std::ostringstream out;
  bool first = true;
  for (const auto &[k, v] : m) {
    out << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  return out.str();
}

std::string joined(const std::vector<std::string> &parts, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

std::string sum_text(const std::vector<std::size_t> &xs) {
  std::vector<std::string> parts;
  for (auto x : xs)
    parts.push_back(text(x));
  return joined(parts, "+");
}

class Recorder {
public:
  explicit Recorder(std::string suite) { cert_.suite = std::move(suite); }

  void expect(std::string name, const std::string &expected,
              const std::string &computed, std::string source,
              std::string note = {}) {
    cert_.checks.push_back({std::move(name), expected, computed,
                            expected == computed, std::move(note),
                            std::move(source)});
  }

  void holds(std::string name, bool ok, std::string source,
             std::string note = {}) {
    expect(std::move(name), "true", ok ? "true" : "false", std::move(source),
           std::move(note));
  }

  // A published statement that the computation contradicts. Recorded, and
  // passing, as long as the computed side meets its own expectation.
  void flag(std::string name, const std::string &printed,
            const std::string &computed, bool computed_ok, std::string note) {
    cert_.checks.push_back({std::move(name), printed, computed, computed_ok,
                            "reference-flag: " + note, "printed"});
  }

  Certificate take() { return std::move(cert_); }

private:
  Certificate cert_;
};

Quaternion c1() {
  return (kHalf * kRoot2) * (Quaternion::one() + Quaternion::unit(1));
}

VertexSet snub_set() {
  return set_difference(binary_icosahedral().elements,
                        binary_tetrahedral().elements);
}

const TransformGroup &wd4c3() {
  static const TransformGroup g = build_group(GroupSpec::wd4c3());
  return g;
}

const TransformGroup &wh4() {
  static const TransformGroup g = build_group(GroupSpec::wh4());
  return g;
}

bool contains_index(const std::vector<std::size_t> &sorted, std::size_t i) {
  return std::binary_search(sorted.begin(), sorted.end(), i);
}

VertexSet cell_vertices(const PolytopeComplex &c, const Cell &cell) {
  std::vector<Quaternion> out;
  for (auto i : cell.vertex_indices)
    out.push_back(c.vertices[i]);
  return canonical(std::move(out));
}

bool vec3_less(const Vec3 &a, const Vec3 &b) {
  for (int i = 0; i < 3; ++i)
    if (auto c = lex_order(a[i], b[i]); c != 0)
      return c < 0;
  return false;
}

Certificate table1() {
  Recorder r("table1");
  const QuaternionGroup &i = binary_icosahedral();
  r.expect("order of I", "120", text(i.order()), "printed");
  const ConjugacyClassTable table = conjugacy_classes(i);
  const auto rows = reference::binary_icosahedral_classes();
  r.expect("number of classes", text(rows.size()), text(table.classes.size()),
           "printed");

  std::vector<std::string> want, got;
  for (const auto &row : rows)
    want.push_back(text(row.members.size()) + "/" +
                   std::to_string(row.element_order));
  for (const auto &c : table.classes)
    got.push_back(text(c.size()) + "/" + std::to_string(c.element_order));
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  r.expect("class size/element order pairs", joined(want, " "),
           joined(got, " "), "printed");

  std::size_t total = 0;
  for (const auto &row : rows) {
    auto it = std::find_if(
        table.classes.begin(), table.classes.end(),
        [&](const ConjugacyClass &c) {
          return icosahedral_class_label(c) == row.label;
        });
    std::string computed = "missing";
    if (it != table.classes.end()) {
      computed = "size " + text(it->size()) + ", order " +
                 std::to_string(it->element_order);
      if (it->members != row.members)
        computed += ", members differ";
      total += it->size();
    }
    r.expect("class " + row.label,
             "size " + text(row.members.size()) + ", order " +
                 std::to_string(row.element_order),
             computed, "printed");
  }
  r.expect("class sizes add up to |I|", "120", text(total), "identity");
  return r.take();
}

Certificate e8() {
  Recorder r("e8");
  const RootSystemData e8 = e8_roots();
  const VertexSet &i = binary_icosahedral().elements;
  r.expect("number of roots", "240", text(e8.roots.size()), "printed");
  r.holds("roots = I u sigma I", e8.roots == set_union(i, scaled(kSigma, i)),
          "printed");

  std::size_t unit = 0;
  for (const auto &a : e8.roots)
    unit += euclid_scalar_product(a, a) == Rational(1);
  r.expect("roots of Euclidean norm 1", "240", text(unit), "printed");

  std::set<std::string> profiles;
  for (const auto &a : e8.roots) {
    std::map<Rational, int> hist;
    for (const auto &b : e8.roots)
      ++hist[euclid_scalar_product(a, b)];
    std::vector<std::string> parts;
    for (const auto &[v, n] : hist)
      parts.push_back(text(v) + ":" + std::to_string(n));
    profiles.insert(joined(parts, ", "));
  }
  r.expect("Euclidean product profile of every root (all pairs)",
           "-1:1, -1/2:56, 0:126, 1/2:56, 1:1",
           joined({profiles.begin(), profiles.end()}, " | "), "derived",
           "brute force over 240 x 240 pairs");

  const RootSystemData f4 = f4_roots();
  std::size_t short_roots = 0, long_roots = 0;
  for (const auto &q : f4.roots) {
    short_roots += norm2(q) == FieldElement(Rational(1, 2));
    long_roots += norm2(q) == FieldElement(1);
  }
  r.expect("F4 short/long roots", "24/24",
           text(short_roots) + "/" + text(long_roots), "printed");

  const VertexSet rest = e8_minus_24cells();
  const VertexSet s = snub_set();
  r.expect("E8 minus T and sigma T", "192", text(rest.size()), "printed");
  r.holds("E8 minus the two 24-cells = S u sigma S",
          rest == set_union(s, scaled(kSigma, s)), "printed");

  VertexSet g = golden_weight_combination(), unit_part;
  std::size_t norm_two = 0;
  for (const auto &q : g) {
    if (norm2(q) == FieldElement(1))
      unit_part.push_back(q);
    norm_two += norm2(q) == FieldElement(2);
  }
  r.holds("golden weight combination: unit part = S", unit_part == s,
          "printed");
  r.expect("golden weight combination: points of norm 2", "96",
           text(norm_two), "printed");
  return r.take();
}

Certificate groups() {
  Recorder r("groups");
  const Quaternion one = Quaternion::one(), p = canonical_p();
  r.expect("|W(H4)|", "14400", text(wh4().order()), "printed");
  r.holds("W(H4) = group of the simple reflections",
          h4_reflection_group().elements == wh4().elements, "derived");
  r.expect("|W(D4):C3|", "576", text(wd4c3().order()), "printed");

  const TransformGroup h3 = stabilizer(wh4(), one);
  r.expect("|W(H3)| as stabilizer of 1", "120", text(h3.order()), "printed");
  const TransformGroup h3c2 = build_group(GroupSpec::wh3xc2(one));
  r.expect("|W(H3)xC2|", "240", text(h3c2.order()), "derived",
           "the +- twisted diagonal swaps 1 and -1");
  r.holds("stabilizer of 1 in W(H3)xC2 = W(H3)",
          stabilizer(h3c2, one).elements == h3.elements, "derived");

  const TransformGroup s4 = build_group(GroupSpec::s4(c1()));
  r.expect("|S4(c1)|", "24", text(s4.order()), "printed");
  r.holds("S4(c1) = stabilizer of c1 in W(D4):C3",
          s4.elements == stabilizer(wd4c3(), c1()).elements, "derived");
  const TransformGroup s3 = build_group(GroupSpec::s3(p));
  r.expect("|S3(p)|", "6", text(s3.order()), "printed");
  r.holds("S3(p) = stabilizer of p in W(D4):C3",
          s3.elements == stabilizer(wd4c3(), p).elements, "derived");
  const TransformGroup a4 = build_group(GroupSpec::a4xc2(one));
  r.expect("|A4xC2|", "24", text(a4.order()), "printed");

  struct Named {
    const char *label;
    const TransformGroup *group;
    Quaternion point;
  };
  const Named cases[] = {{"W(H4) at 1", &wh4(), one},
                         {"W(D4):C3 at 1", &wd4c3(), one},
                         {"W(D4):C3 at p", &wd4c3(), p},
                         {"W(D4):C3 at c1", &wd4c3(), c1()},
                         {"W(H3)xC2 at 1", &h3c2, one},
                         {"S4(c1) at 1", &s4, one},
                         {"S3(p) at q1", &s3, reference::snub_neighbors()[0]}};
  for (const auto &c : cases) {
    const std::size_t o = orbit(*c.group, c.point).size();
    const std::size_t st = stabilizer(*c.group, c.point).order();
    r.expect(std::string("orbit-stabilizer, ") + c.label,
             text(c.group->order()), text(o * st), "identity",
             "orbit " + text(o) + ", stabilizer " + text(st));
  }

  r.holds("W(H4) orbit of 1 = I",
          orbit(wh4(), one) == binary_icosahedral().elements, "printed");
  r.expect("I under W(D4):C3", "24+96",
           sum_text(orbit_decompose(wd4c3(), binary_icosahedral().elements)
                        .sizes),
           "printed");
  const Cell120 &j = build_120cell();
  r.expect("120-cell vertices under W(D4):C3", "24+96+192+288",
           sum_text(orbit_decompose(wd4c3(), j.vertices).sizes), "printed");
  bool parts_ok = true;
  for (const auto *part : {&j.t_prime, &j.s_prime, &j.m, &j.n})
    parts_ok = parts_ok && orbit(wd4c3(), part->front()) == *part;
  r.holds("T', S', M, N are single orbits", parts_ok, "printed");
  return r.take();
}

Certificate snub() {
  Recorder r("snub");
  const PolytopeComplex &c = snub24_complex();
  const Quaternion p = canonical_p();
  r.expect("vertices", "96", text(c.vertices.size()), "printed");
  r.expect("edges", "432", text(c.edges.size()), "printed");
  r.expect("triangles", "480", text(c.faces.size()), "printed");
  r.expect("cells", "144", text(c.cells.size()), "printed");

  std::vector<std::size_t> degree(c.vertices.size()), tri(c.vertices.size());
  for (const auto &[a, b] : c.edges)
    ++degree[a], ++degree[b];
  for (const auto &t : c.faces)
    for (auto v : t)
      ++tri[v];
  std::map<std::size_t, std::size_t> deg_hist, tri_hist;
  for (std::size_t v = 0; v < c.vertices.size(); ++v)
    ++deg_hist[degree[v]], ++tri_hist[tri[v]];
  r.expect("degree histogram", "9:96", text(deg_hist), "printed");
  r.expect("triangles per vertex", "15:96", text(tri_hist), "printed");

  std::map<std::string, std::size_t> kinds;
  std::size_t certified = 0;
  for (const auto &cell : c.cells) {
    ++kinds[to_string(cell.kind)];
    std::size_t on = 0;
    bool below = true;
    for (const auto &v : c.vertices) {
      const int s = compare(scalar_product(cell.normal, v), cell.offset);
      on += s == 0;
      below = below && s <= 0;
    }
    certified += below && on == cell.vertex_indices.size();
  }
  r.expect("cell kinds", "icosahedron:24, tetrahedron:120", text(kinds),
           "printed");
  r.expect("cells with a strict supporting hyperplane", "144",
           text(certified), "derived");
  r.expect("V - E + F - C", "0", std::to_string(euler_characteristic(c)),
           "identity");

  const IncidenceReport inc = incidences(c);
  r.expect("cells per triangle", "2:480", text(inc.cells_per_face),
           "derived");
  r.expect("cells per vertex", "8:96", text(inc.cells_per_vertex), "derived");
  r.expect("cells per edge", "3:288, 4:144", text(inc.cells_per_edge),
           "derived",
           "edges of an icosahedral cell meet 3 cells, the others 4");

  // Local structure at p.
  const std::size_t ip = *index_of(c.vertices, p);
  std::size_t ico_at_p = 0;
  for (const auto &cell : c.cells)
    ico_at_p += cell.kind == CellKind::Icosahedron &&
                contains_index(cell.vertex_indices, ip);
  const TetraStar star = tetra_cells_at(p);
  r.expect("tetrahedra at p", "5", text(star.cells.size()), "printed");
  r.expect("icosahedra at p", "3", text(ico_at_p), "printed");
  std::size_t matched = 0;
  for (const auto &row : reference::tetrahedra_at_p())
    for (std::size_t k = 0; k < star.cells.size(); ++k)
      matched += cell_vertices(c, star.cells[k]) == row.vertices &&
                 star.centers[k] == row.center;
  r.expect("P(1)..P(5) and c1..c5 as printed", "5", text(matched), "printed");
  const Cell120 &j = build_120cell();
  std::size_t in_sprime = 0;
  bool c1_in_tprime = false;
  for (const auto &ctr : star.centers) {
    c1_in_tprime = c1_in_tprime || (ctr == c1() && contains(j.t_prime, ctr));
    in_sprime += contains(ray_set(j.s_prime), ray(ctr));
  }
  r.holds("c1 in T'", c1_in_tprime, "printed");
  r.expect("centers projectively in S'", "4", text(in_sprime), "printed");

  // Vertex figure.
  const VertexFigure f = vertex_figure(p);
  r.holds("neighbours of p = q1..q9",
          f.neighbors == canonical(reference::snub_neighbors()), "printed");
  std::vector<Vec3> doubled, printed = reference::vertex_figure_coords();
  for (const auto &x : f.coords)
    doubled.push_back({FieldElement(2) * x[0], FieldElement(2) * x[1],
                       FieldElement(2) * x[2]});
  std::sort(doubled.begin(), doubled.end(), vec3_less);
  std::sort(printed.begin(), printed.end(), vec3_less);
  r.holds("vertex figure coordinates (1/2 cleared)", doubled == printed,
          "printed");
  std::map<std::size_t, std::size_t> census;
  for (const auto &face : f.faces)
    ++census[face.size()];
  r.expect("vertex figure faces (sides:count)", "3:5, 5:3", text(census),
           "printed");
  auto completed = reference::vertex_figure_coords();
  const FieldElement s = kSigma;
  for (const Vec3 &x : {Vec3{-1, 0, -s}, Vec3{-s, 1, 0}, Vec3{0, s, -1}})
    completed.push_back(x);
  r.expect("completed vertex figure: hull faces", "20",
           text(convex_hull_3d(completed).size()), "printed");

  const TransformGroup s3 = build_group(GroupSpec::s3(p));
  const auto q = reference::snub_neighbors();
  bool permuted = true;
  for (std::size_t start : {0, 3, 6}) {
    const VertexSet triple = canonical({q[start], q[start + 1], q[start + 2]});
    permuted = permuted && orbit(s3, triple.front()) == triple;
  }
  r.holds("S3(p) permutes each neighbour triple", permuted, "printed");

  // Inside the 600-cell.
  const PolytopeComplex i = cell_census(binary_icosahedral().elements);
  const std::size_t ip600 = *index_of(i.vertices, p);
  std::size_t at_p = 0, touch_t = 0;
  std::vector<Quaternion> touching_rays;
  for (const auto &cell : i.cells) {
    bool touches = false;
    for (auto v : cell.vertex_indices)
      touches = touches || binary_tetrahedral().contains(i.vertices[v]);
    if (touches)
      touching_rays.push_back(ray(cell.normal));
    if (contains_index(cell.vertex_indices, ip600)) {
      ++at_p;
      touch_t += touches;
    }
  }
  r.expect("600-cell tetrahedra", "600", text(i.cells.size()), "printed");
  r.expect("600-cell tetrahedra at p / touching T", "20/15",
           text(at_p) + "/" + text(touch_t), "printed");
  r.expect("600-cell tetrahedra touching T", "480",
           text(touching_rays.size()), "printed");
  r.holds("their centers lie on M u N up to scale",
          canonical(touching_rays) == ray_set(set_union(j.m, j.n)), "printed");

  const auto embeddings = snub_embeddings_in_600cell();
  auto set_less = [](const VertexSet &a, const VertexSet &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end(), LexLess{});
  };
  std::set<VertexSet, decltype(set_less)> distinct(set_less);
  std::size_t good = 0;
  for (const auto &e : embeddings) {
    distinct.insert(e);
    const PolytopeComplex ec = cell_census(e);
    good += e.size() == 96 && ec.edges.size() == 432 && ec.cells.size() == 144;
  }
  r.expect("distinct snub embeddings in the 600-cell", "5",
           text(distinct.size()), "printed");
  r.expect("embeddings passing the 144-cell census", "5", text(good),
           "derived");
  return r.take();
}

Certificate dual() {
  Recorder r("dual");
  const DualComplex &d = dual_complex();
  const Quaternion p = canonical_p();
  r.expect("vertices", "144", text(d.vertices.size()), "printed");
  r.expect("edges", "480", text(d.edges.size()), "printed");
  r.expect("faces", "432", text(d.faces.size()), "printed");
  r.expect("cells", "96", text(d.cells.size()), "printed");
  std::size_t kites = 0;
  for (const auto &f : d.faces)
    kites += f.kite;
  r.expect("kites/triangles", "144/288",
           text(kites) + "/" + text(d.faces.size() - kites), "printed");
  const long euler =
      static_cast<long>(d.vertices.size()) - static_cast<long>(d.edges.size()) +
      static_cast<long>(d.faces.size()) - static_cast<long>(d.cells.size());
  r.expect("V - E + F - C", "0", std::to_string(euler), "identity");

  std::vector<int> per_face(d.faces.size(), 0);
  std::map<std::string, std::size_t> shapes;
  for (const auto &c : d.cells) {
    ++shapes[text(c.vertex_indices.size()) + " vertices/" +
             text(c.face_indices.size()) + " faces"];
    for (auto f : c.face_indices)
      ++per_face[f];
  }
  r.expect("cell shapes", "8 vertices/9 faces:96", text(shapes), "printed");
  r.holds("every face in exactly two cells",
          std::all_of(per_face.begin(), per_face.end(),
                      [](int n) { return n == 2; }),
          "derived");

  // The representative cell.
  const auto named = canonical_dual_cell_vertices();
  const DualCell &cell = d.cells[dual_cell_index(p)];
  std::vector<std::size_t> named_idx;
  for (const auto &x : named)
    named_idx.push_back(*index_of(d.vertices, x));
  auto positions = [&](const std::vector<std::size_t> &which) {
    std::vector<std::size_t> out;
    for (auto w : which)
      out.push_back(named_idx[w]);
    std::sort(out.begin(), out.end());
    return out;
  };
  r.holds("cell at p has the eight named vertices",
          cell.vertex_indices == positions({0, 1, 2, 3, 4, 5, 6, 7}),
          "printed");
  bool on_plane = true;
  for (const auto &x : named)
    on_plane = on_plane && scalar_product(p, x) == dual_offset();
  r.holds("(p, x) = tau^2/(2 sqrt2) on the cell", on_plane, "printed");
  const auto coords =
      dual_cell_coordinates(p, {named.begin(), named.end()});
  const auto printed = reference::dual_cell_coords();
  const FieldElement k = FieldElement(2) * kRoot2;
  bool coords_ok = true;
  for (std::size_t i = 0; i < 8; ++i)
    coords_ok = coords_ok && Vec3{k * coords[i][0], k * coords[i][1],
                                  k * coords[i][2]} == printed[i];
  r.holds("cell coordinates around p (1/(2 sqrt2) cleared)", coords_ok,
          "printed");
  std::set<std::vector<std::size_t>> got_k, got_t, want_k, want_t;
  for (auto f : cell.face_indices) {
    auto vs = d.faces[f].cycle;
    std::sort(vs.begin(), vs.end());
    (d.faces[f].kite ? got_k : got_t).insert(vs);
  }
  for (const auto &k4 : printed_kites())
    want_k.insert(positions(k4));
  for (const auto &t3 : printed_triangles())
    want_t.insert(positions(t3));
  r.holds("kites of the cell at p", got_k == want_k, "printed");
  r.holds("triangles of the cell at p", got_t == want_t, "printed");

  // Metrics, all faces.
  const FieldElement s2 = kSigma * kSigma, s4 = s2 * s2;
  auto bag = [](std::vector<FieldElement> xs) {
    std::vector<std::string> out;
    for (const auto &x : xs)
      out.push_back(to_string(x));
    std::sort(out.begin(), out.end());
    return joined(out, "; ");
  };
  const std::string kite_edges = bag({kHalf, kHalf, kHalf * s4, kHalf * s4});
  const std::string kite_diag = bag({kHalf * s2, FieldElement(1) + kHalf * kSigma});
  const std::string tri_edges = bag({kHalf, kHalf, kHalf * kTau * kTau});
  std::size_t kite_ok = 0, tri_ok = 0;
  for (const auto &f : d.faces) {
    const FaceMetric m = face_metric(d, f);
    if (f.kite)
      kite_ok += bag(m.edges2) == kite_edges && bag(m.diagonals2) == kite_diag;
    else
      tri_ok += bag(m.edges2) == tri_edges;
  }
  r.expect("kites with squared edges {1/2, sigma^4/2} and diagonals "
           "{sigma^2/2, 1 + sigma/2}",
           "144", text(kite_ok), "printed",
           "the long diagonal is not printed; its value is derived");
  r.expect("triangles with squared edges {1/2, 1/2, tau^2/2}", "288",
           text(tri_ok), "printed", "legs 1/sqrt2, base tau/sqrt2");

  // Transitivity.
  std::set<std::vector<std::size_t>> images, cells;
  for (const auto &g : wd4c3().elements) {
    std::vector<std::size_t> idx;
    for (const auto &x : named) {
      auto i = index_of(d.vertices, apply(g, x));
      idx.push_back(i ? *i : d.vertices.size());
    }
    std::sort(idx.begin(), idx.end());
    images.insert(idx);
  }
  for (const auto &c : d.cells)
    cells.insert(c.vertex_indices);
  r.holds("W(D4):C3 maps the cell at p onto every cell", images == cells,
          "printed");

  // Valences.
  const ValenceReport v = dual_valences();
  r.expect("cells per T' vertex", "4:24", text(v.t_prime), "printed");
  r.expect("cells per (tau/sqrt2) T vertex", "12:24", text(v.icosahedral),
           "derived");
  r.flag("cells per S' vertex", "1", text(v.s_prime),
         v.s_prime == std::map<std::size_t, std::size_t>{{4, 96}},
         "printed as one cell per S' vertex; incidence counting gives 4");
  r.expect("cells in which an S' vertex lies on no kite", "1:96",
           text(v.s_prime_apex), "derived",
           "the apex role c2 plays in the cell at p");

  // Around c1.
  const VertexSurroundings around = vertex_surroundings(c1());
  r.expect("cells at c1", "4", text(around.cells), "printed");
  const FieldElement zero, m = -kSigma, r5 = FieldElement::sqrt5();
  const VertexSet printed37 =
      canonical({{r5, -kSigma, zero, -kTau}, {m, r5, kTau, zero},
                 {r5, -kSigma, zero, kTau}, {m, r5, -kTau, zero}});
  r.holds("c2-type apexes around c1, up to scale",
          ray_set(around.tetra_apexes) == ray_set(printed37), "printed");
  r.flag("prefactor of the c2-type apexes", "1/sqrt2", "1/(2 sqrt2)",
         around.tetra_apexes == scaled(Rational(1, 4) * kRoot2, printed37),
         "with 1/sqrt2 the points have norm 2, not 1");
  const Quaternion t1 = half(1, 1, -1, -1), t2 = half(1, 1, 1, -1);
  const Quaternion s1 = half(1, 1, -1, 1), sb2 = qconj(half(1, -1, -1, -1));
  const Quaternion e1 = Quaternion::unit(1), one = Quaternion::one();
  r.flag("octahedron around c1", "{1, t1, t2, e1, s1, s2}",
         "{1, t1, t2, e1, s1, conj(s2)}",
         around.octahedron == canonical({one, t1, t2, e1, s1, sb2}),
         "s2 = (1-e1-e2-e3)/2 is orthogonal to c1; the octahedron needs "
         "its conjugate");
  const FieldElement kq = Rational(1, 4) * kRoot2;
  const Quaternion c6 = kq * Quaternion{kTau, r5, zero, -kSigma};
  r.holds("inner tetrahedron {c3, c4, c5, c6}",
          around.inner_tetrahedron ==
              canonical({named[5], named[6], named[7], c6}),
          "printed");

  // Rotation about c1.
  const auto cols = cell_rotation_orbit();
  const FieldElement st = kHalf * kTau * kRoot2;
  const std::array<std::array<Quaternion, 3>, 4> ico = {
      {{one, t1, t2}, {e1, t2, sb2}, {one, sb2, s1}, {e1, s1, t1}}};
  const std::array<std::array<Quaternion, 3>, 4> tet = {
      {{named[5], named[6], named[7]},
       {c6, named[5], named[6]},
       {named[7], c6, named[5]},
       {named[6], named[7], c6}}};
  const std::array<Quaternion, 4> c2s = {
      kq * Quaternion{r5, -kSigma, zero, -kTau},
      kq * Quaternion{m, r5, kTau, zero}, kq * Quaternion{r5, -kSigma, zero, kTau},
      kq * Quaternion{m, r5, -kTau, zero}};
  bool fixed = true, tet_ok = true, ico_ok = true, c2_ok = true;
  for (std::size_t col = 0; col < 4; ++col) {
    fixed = fixed && cols[col][3] == named[3];
    c2_ok = c2_ok && cols[col][4] == c2s[col];
    for (std::size_t k3 = 0; k3 < 3; ++k3) {
      tet_ok = tet_ok && cols[col][5 + k3] == tet[col][k3];
      ico_ok = ico_ok && cols[col][k3] == st * ico[col][k3];
    }
  }
  r.holds("rotation [1, e1]*: c1 fixed", fixed, "printed");
  r.holds("rotation [1, e1]*: (c3, c4, c5) columns", tet_ok, "printed");
  r.holds("rotation [1, e1]*: c2 -> c2' -> c2'' -> c2'''", c2_ok, "printed");
  r.holds("rotation [1, e1]*: (tau/sqrt2) triples, with conj(s2) for s2",
          ico_ok, "printed");
  return r.take();
}

Certificate appendix() {
  Recorder r("appendix");
  const auto reports = appendix_decompositions();
  r.expect("weight masks", "15", text(reports.size()), "printed");
  std::vector<std::size_t> sizes;
  bool stab_ok = true;
  for (const auto &rep : reports) {
    sizes.push_back(rep.orbit_size);
    stab_ok = stab_ok && rep.orbit_stabilizer_ok;
  }
  std::sort(sizes.begin(), sizes.end());
  std::vector<std::string> size_text;
  for (auto s : sizes)
    size_text.push_back(text(s));
  r.expect("orbit sizes",
           "120 600 720 1200 1440 2400 2400 3600 3600 3600 7200 7200 7200 "
           "7200 14400",
           joined(size_text, " "), "printed");
  r.holds("orbit-stabilizer under W(D4):C3 for every suborbit", stab_ok,
          "identity");

  std::set<unsigned> masks;
  for (const auto &m : match_appendix(reports)) {
    masks.insert(m.mask);
    const std::string name = "line " + std::to_string(m.line);
    if (!m.matched) {
      r.expect(name, m.printed, "unmatched", "printed");
    } else if (m.printed_sum_consistent) {
      r.expect(name, m.printed, m.computed, "printed",
               "mask " + mask_string(m.mask));
    } else {
      std::size_t printed_sum = 0, size = 0;
      for (const auto &line : reference::decomposition_lines())
        if (line.line == m.line) {
          size = line.size;
          for (const auto &[part, mult] : line.parts)
            printed_sum += part * static_cast<std::size_t>(mult);
        }
      r.flag(name, m.printed, m.computed,
             m.computed == "3600 = 144+4(288)+4(576)",
             "printed parts sum to " + text(printed_sum) + ", not " +
                 text(size) + "; mask " + mask_string(m.mask) + " gives " +
                 m.computed);
    }
  }
  r.expect("distinct masks matched", "15", text(masks.size()), "derived");
  return r.take();
}

} // namespace

bool Certificate::overall() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check &c) { return c.pass; });
}

std::size_t Certificate::flags() const {
  return std::count_if(checks.begin(), checks.end(), [](const Check &c) {
    return c.note.starts_with("reference-flag:");
  });
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {
      "table1", "e8", "groups", "snub", "dual", "appendix"};
  return names;
}

std::vector<Certificate> run_suite(const std::string &name) {
  if (name == "all") {
    std::vector<Certificate> out;
    for (const auto &n : suite_names())
      out.push_back(run_suite(n).front());
    return out;
  }
  if (name == "table1")
    return {table1()};
  if (name == "e8")
    return {e8()};
  if (name == "groups")
    return {groups()};
  if (name == "snub")
    return {snub()};
  if (name == "dual")
    return {dual()};
  if (name == "appendix")
    return {appendix()};
  throw BadParameter("unknown suite: " + name);
}

nlohmann::json to_json(const Certificate &c) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &k : c.checks) {
    nlohmann::json j = {{"name", k.name},
                        {"expected", k.expected},
                        {"computed", k.computed},
                        {"pass", k.pass},
                        {"source", k.source}};
    if (!k.note.empty())
      j["note"] = k.note;
    checks.push_back(std::move(j));
  }
  return {{"suite", c.suite},
          {"overall", c.overall()},
          {"flags", c.flags()},
          {"checks", checks}};
}

} // namespace icosian
