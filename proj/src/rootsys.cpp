#include "icosian/rootsys.hpp"

#include <algorithm>
#include <map>

#include "icosian/errors.hpp"
#include "icosian/parallel.hpp"
#include "icosian/qgroups.hpp"
#include "icosian/reference.hpp"

namespace icosian {

namespace {

const FieldElement kSigma = FieldElement::sigma();
const FieldElement kTau = FieldElement::tau();

// {x a + y b : a in A, b in B}
std::vector<Quaternion> pair_sums(const VertexSet &a, const VertexSet &b,
                                  const FieldElement &x,
                                  const FieldElement &y) {
  std::vector<Quaternion> out;
  out.reserve(a.size() * b.size());
  for (const auto &u : a)
    for (const auto &v : b)
      out.push_back(x * u + y * v);
  return out;
}

const TransformGroup &wd4c3() {
  static const TransformGroup g = build_group(GroupSpec::wd4c3());
  return g;
}

} // namespace

D4Data d4_data() {
  D4Data d;
  d.v1 = d4_vector_orbit(1);
  d.v2 = d4_vector_orbit(2);
  d.v3 = d4_vector_orbit(3);
  d.t = binary_tetrahedral().elements;
  d.system.label = "D4";
  d.system.roots = d.t;
  d.system.simple_roots = {Quaternion::unit(1), half(1, -1, -1, -1),
                           Quaternion::unit(2), Quaternion::unit(3)};
  return d;
}

RootSystemData f4_roots() {
  D4Data d = d4_data();
  RootSystemData f;
  f.label = "F4";
  f.roots = set_union(set_union(d.v1, d.v2), set_union(d.v3, d.t));
  return f;
}

RootSystemData e8_roots() {
  D4Data d = d4_data();
  const FieldElement one(1);
  std::vector<Quaternion> all = pair_sums(d.v1, d.v3, one, kSigma);
  for (auto &&part : {pair_sums(d.v2, d.v1, one, kSigma),
                      pair_sums(d.v3, d.v2, one, kSigma)})
    all.insert(all.end(), part.begin(), part.end());
  for (const auto &t : d.t) {
    all.push_back(t);
    all.push_back(kSigma * t);
  }
  RootSystemData e;
  e.label = "E8";
  e.roots = canonical(std::move(all));
  e.metric = Metric::EuclideanPart;
  return e;
}

VertexSet e8_minus_24cells() {
  D4Data d = d4_data();
  const FieldElement one(1);
  std::vector<Quaternion> all = pair_sums(d.v1, d.v3, one, kSigma);
  for (auto &&part : {pair_sums(d.v3, d.v2, one, kSigma),
                      pair_sums(d.v2, d.v1, one, kSigma)})
    all.insert(all.end(), part.begin(), part.end());
  return canonical(std::move(all));
}

VertexSet golden_weight_combination() {
  D4Data d = d4_data();
  std::vector<Quaternion> all = pair_sums(d.v1, d.v2, kTau, kSigma);
  for (auto &&part : {pair_sums(d.v2, d.v3, kTau, kSigma),
                      pair_sums(d.v3, d.v1, kTau, kSigma)})
    all.insert(all.end(), part.begin(), part.end());
  return canonical(std::move(all));
}

std::array<Quaternion, 4> h4_simple_roots() {
  static const std::array<Quaternion, 4> roots = [] {
    const VertexSet &i = binary_icosahedral().elements;
    const FieldElement mhalf(Rational(-1, 2));
    const FieldElement mhalf_tau = Rational(-1, 2) * kTau;
    auto sp = [](const Quaternion &a, const Quaternion &b) {
      return scalar_product(a, b);
    };
    for (const auto &a1 : i)
      for (const auto &a2 : i) {
        if (sp(a1, a2) != mhalf)
          continue;
        for (const auto &a3 : i) {
          if (sp(a2, a3) != mhalf || !sp(a1, a3).is_zero())
            continue;
          for (const auto &a4 : i)
            if (sp(a3, a4) == mhalf_tau && sp(a1, a4).is_zero() &&
                sp(a2, a4).is_zero())
              return std::array<Quaternion, 4>{a1, a2, a3, a4};
        }
      }
    throw SearchFailed("no H4 simple root system in I");
  }();
  return roots;
}

TransformGroup h4_reflection_group() {
  std::vector<Transform> gens;
  for (const auto &a : h4_simple_roots())
    gens.push_back(reflection(a));
  return generate(gens, "W(H4) from reflections");
}

std::array<Quaternion, 4> h4_fundamental_weights() {
  const auto roots = h4_simple_roots();
  std::array<Quaternion, 4> w;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<FieldElement> rhs(4);
    rhs[i] = FieldElement(Rational(1, 2));
    auto sol = solve_scalar_products(roots, rhs);
    if (!sol)
      throw SearchFailed("H4 simple roots are linearly dependent");
    w[i] = *sol;
  }
  return w;
}

std::string mask_string(unsigned mask) {
  std::string s(4, '0');
  for (unsigned i = 0; i < 4; ++i)
    if (mask & (8u >> i))
      s[i] = '1';
  return s;
}

VertexSet h4_orbit(unsigned mask) {
  if (mask == 0 || mask > 15)
    throw BadParameter("weight mask must be a nonzero 4-bit value");
  const auto roots = h4_simple_roots();
  const auto w = h4_fundamental_weights();
  Quaternion seed;
  for (unsigned i = 0; i < 4; ++i)
    if (mask & (8u >> i))
      seed = seed + w[i];
  // Unit roots: r -> r - 2 (r, a) a.
  auto step = [&](const Quaternion &r, std::vector<Quaternion> &out) {
    for (const auto &a : roots)
      out.push_back(r - (FieldElement(2) * scalar_product(r, a)) * a);
  };
  return closure_of<Quaternion, QuaternionHash>({seed}, step, 14400, LexLess{},
                                                "H4 weight orbit");
}

WeightOrbitReport weight_orbit_report(unsigned mask) {
  WeightOrbitReport r;
  r.mask = mask;
  VertexSet orb = h4_orbit(mask);
  r.orbit_size = orb.size();
  OrbitPartition parts = orbit_decompose(wd4c3(), orb);
  r.decomposition = parts.sizes;
  r.orbit_stabilizer_ok = true;
  for (const auto &sub : parts.suborbits)
    if (sub.size() * stabilizer(wd4c3(), sub.front()).order() !=
        wd4c3().order())
      r.orbit_stabilizer_ok = false;
  return r;
}

std::vector<WeightOrbitReport> appendix_decompositions() {
  std::vector<WeightOrbitReport> out;
  for (unsigned mask = 1; mask < 16; ++mask)
    out.push_back(weight_orbit_report(mask));
  return out;
}

std::string format_decomposition(std::size_t size,
                                 const std::vector<std::size_t> &parts) {
  std::map<std::size_t, int> counts;
  for (auto p : parts)
    ++counts[p];
  std::string s = std::to_string(size) + " =";
  bool first = true;
  for (const auto &[part, k] : counts) {
    s += first ? " " : "+";
    first = false;
    if (k == 1)
      s += std::to_string(part);
    else
      s += std::to_string(k) + "(" + std::to_string(part) + ")";
  }
  return s;
}

std::vector<AppendixMatch>
match_appendix(const std::vector<WeightOrbitReport> &reports) {
  auto lines = reference::decomposition_lines();
  std::vector<AppendixMatch> out(lines.size());
  std::vector<char> used(reports.size(), 0);

  auto expand = [](const std::map<std::size_t, int> &m) {
    std::vector<std::size_t> v;
    for (const auto &[part, k] : m)
      v.insert(v.end(), k, part);
    return v;
  };

  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto &line = lines[l];
    auto &m = out[l];
    m.line = line.line;
    std::vector<std::size_t> printed = expand(line.parts);
    std::size_t sum = 0;
    for (auto p : printed)
      sum += p;
    m.printed_sum_consistent = sum == line.size;
    m.printed = format_decomposition(line.size, printed);
    if (!m.printed_sum_consistent)
      continue;
    for (std::size_t r = 0; r < reports.size(); ++r)
      if (!used[r] && reports[r].orbit_size == line.size &&
          reports[r].decomposition == printed) {
        used[r] = 1;
        m.matched = m.exact = true;
        m.mask = reports[r].mask;
        m.computed = format_decomposition(line.size, reports[r].decomposition);
        break;
      }
  }
  // Lines that do not add up take a leftover report of the same size.
  for (std::size_t l = 0; l < lines.size(); ++l) {
    auto &m = out[l];
    if (m.printed_sum_consistent)
      continue;
    for (std::size_t r = 0; r < reports.size(); ++r)
      if (!used[r] && reports[r].orbit_size == lines[l].size) {
        used[r] = 1;
        m.matched = true;
        m.mask = reports[r].mask;
        m.computed =
            format_decomposition(lines[l].size, reports[r].decomposition);
        break;
      }
  }
  return out;
}

} // namespace icosian
