#include "icosian/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "icosian/errors.hpp"
#include "icosian/parallel.hpp"
#include "icosian/qgroups.hpp"

namespace icosian {

namespace {

int leading_sign(const Quaternion &p) {
  for (const auto &x : p.components())
    for (const auto &r : x.coeffs())
      if (int s = r.sign(); s != 0)
        return s;
  return 0;
}

} // namespace

Transform::Transform(Quaternion p, Quaternion q, bool star)
    : p_(std::move(p)), q_(std::move(q)), star_(star) {
  if (leading_sign(p_) < 0) {
    p_ = -p_;
    q_ = -q_;
  }
}

std::size_t Transform::hash() const {
  return (p_.hash() * 31u) ^ q_.hash() ^ (star_ ? 0x9e3779b9u : 0u);
}

std::strong_ordering lex_order(const Transform &a, const Transform &b) {
  if (auto c = a.star() <=> b.star(); c != 0)
    return c;
  if (auto c = lex_order(a.left(), b.left()); c != 0)
    return c;
  return lex_order(a.right(), b.right());
}

Quaternion apply(const Transform &t, const Quaternion &r) {
  const Quaternion &x = t.star() ? qconj(r) : r;
  return qmul(qmul(t.left(), x), t.right());
}

// [p,q][r,s] = [pr, sq]; [p,q][r,s]* = [pr, sq]*;
// [p,q]*[r,s] = [p conj(s), conj(r) q]*; [p,q]*[r,s]* = [p conj(s), conj(r) q].
Transform compose(const Transform &outer, const Transform &inner) {
  const Quaternion &p = outer.left(), &q = outer.right();
  const Quaternion &r = inner.left(), &s = inner.right();
  if (!outer.star())
    return {qmul(p, r), qmul(s, q), inner.star()};
  return {qmul(p, qconj(s)), qmul(qconj(r), q), !inner.star()};
}

Transform inverse(const Transform &t) {
  if (!t.star())
    return {qconj(t.left()), qconj(t.right()), false};
  return {t.right(), t.left(), true};
}

Transform reflection(const Quaternion &alpha) { return {-alpha, alpha, true}; }

bool TransformGroup::contains(const Transform &t) const {
  return std::binary_search(elements.begin(), elements.end(), t,
                            TransformLess{});
}

TransformGroup generate(const std::vector<Transform> &generators,
                        std::string label, std::size_t cap) {
  auto step = [&](const Transform &x, std::vector<Transform> &out) {
    for (const auto &g : generators)
      out.push_back(compose(x, g));
  };
  TransformGroup group;
  group.elements = closure_of<Transform, TransformHash>(
      {Transform::identity()}, step, cap, TransformLess{},
      "transform group closure");
  group.generators = generators;
  group.label = std::move(label);
  return group;
}

namespace {

std::vector<Transform> canonical_transforms(std::vector<Transform> ts) {
  std::sort(ts.begin(), ts.end(), TransformLess{});
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Generators of T and I as quaternion groups.
std::vector<Quaternion> tetrahedral_generators() {
  return {Quaternion::unit(1), half(1, 1, 1, 1)};
}

std::vector<Quaternion> icosahedral_generators() {
  auto g = tetrahedral_generators();
  g.push_back(canonical_p());
  return g;
}

// {[a,b] u [a,b]* : a, b in set}, generated by one-sided moves and [1,1]*.
TransformGroup product_group(const VertexSet &set,
                             const std::vector<Quaternion> &set_gens,
                             std::string label) {
  std::vector<Transform> all;
  all.reserve(set.size() * set.size() * 2);
  for (const auto &a : set)
    for (const auto &b : set) {
      all.emplace_back(a, b, false);
      all.emplace_back(a, b, true);
    }
  TransformGroup g;
  g.elements = canonical_transforms(std::move(all));
  for (const auto &x : set_gens) {
    g.generators.emplace_back(x, Quaternion::one(), false);
    g.generators.emplace_back(Quaternion::one(), x, false);
  }
  g.generators.emplace_back(Quaternion::one(), Quaternion::one(), true);
  g.label = std::move(label);
  return g;
}

// {[x, +-conj(c) conj(x) c] u [x, +-c conj(x) c]* : x in set}: the point
// stabilizer pattern of the icosahedral, tetrahedral and S4 subgroups.
TransformGroup twisted_diagonal(const VertexSet &set,
                                const std::vector<Quaternion> &set_gens,
                                const Quaternion &c, bool with_negation,
                                std::string label) {
  const Quaternion cb = qconj(c);
  std::vector<Transform> all;
  for (const auto &x : set) {
    const Quaternion xb = qconj(x);
    Quaternion plain = qmul(qmul(cb, xb), c);
    Quaternion starred = qmul(qmul(c, xb), c);
    all.emplace_back(x, plain, false);
    all.emplace_back(x, starred, true);
    if (with_negation) {
      all.emplace_back(x, -plain, false);
      all.emplace_back(x, -starred, true);
    }
  }
  TransformGroup g;
  g.elements = canonical_transforms(std::move(all));
  for (const auto &x : set_gens)
    g.generators.emplace_back(x, qmul(qmul(cb, qconj(x)), c), false);
  g.generators.emplace_back(Quaternion::one(), qmul(c, c), true);
  if (with_negation)
    g.generators.emplace_back(Quaternion::one(), -Quaternion::one(), false);
  g.label = std::move(label);
  return g;
}

} // namespace

std::vector<Transform> s3_generators() {
  const Quaternion s1 = half(1, 1, -1, 1);
  const Quaternion s2 = half(1, -1, -1, -1);
  const Quaternion e2 = Quaternion::unit(2);
  return {Transform(s1, s2, false), Transform(e2, -e2, true)};
}

TransformGroup build_group(const GroupSpec &spec) {
  switch (spec.kind) {
  case GroupKind::WH4:
    return product_group(binary_icosahedral().elements,
                         icosahedral_generators(), "W(H4)");
  case GroupKind::WD4C3:
    return product_group(binary_tetrahedral().elements,
                         tetrahedral_generators(), "W(D4):C3");
  case GroupKind::WH3xC2:
    if (!binary_icosahedral().contains(spec.param))
      throw BadParameter("W(H3)xC2 parameter must lie in I");
    return twisted_diagonal(binary_icosahedral().elements,
                            icosahedral_generators(), spec.param, true,
                            "W(H3)xC2");
  case GroupKind::A4xC2:
    if (!binary_tetrahedral().contains(spec.param))
      throw BadParameter("A4xC2 parameter must lie in T");
    return twisted_diagonal(binary_tetrahedral().elements,
                            tetrahedral_generators(), spec.param, false,
                            "A4xC2");
  case GroupKind::S4:
    if (!contains(t_prime(), spec.param))
      throw BadParameter("S4 parameter must lie in T'");
    return twisted_diagonal(binary_tetrahedral().elements,
                            tetrahedral_generators(), spec.param, false, "S4");
  case GroupKind::S3: {
    const VertexSet snub = set_difference(binary_icosahedral().elements,
                                          binary_tetrahedral().elements);
    if (!contains(snub, spec.param))
      throw BadParameter("S3 parameter must lie in the snub 24-cell");
    std::vector<Transform> gens = s3_generators();
    if (!(spec.param == canonical_p())) {
      Transform g = transporter(build_group(GroupSpec::wd4c3()), canonical_p(),
                                spec.param);
      Transform gi = inverse(g);
      for (auto &x : gens)
        x = compose(compose(g, x), gi);
    }
    return generate(gens, "S3");
  }
  case GroupKind::Custom:
    return generate(spec.custom, "custom");
  }
  throw BadParameter("unknown group kind");
}

TransformGroup conjugate(const TransformGroup &group, const Transform &h) {
  const Transform hi = inverse(h);
  auto conj = [&](const Transform &g) { return compose(compose(h, g), hi); };
  TransformGroup out;
  std::vector<Transform> els;
  els.reserve(group.elements.size());
  for (const auto &g : group.elements)
    els.push_back(conj(g));
  out.elements = canonical_transforms(std::move(els));
  for (const auto &g : group.generators)
    out.generators.push_back(conj(g));
  out.label = group.label + "^h";
  return out;
}

namespace {

const std::vector<Transform> &acting_set(const TransformGroup &group) {
  return group.generators.empty() ? group.elements : group.generators;
}

} // namespace

VertexSet orbit(const TransformGroup &group, const Quaternion &v) {
  const auto &gens = acting_set(group);
  auto step = [&](const Quaternion &x, std::vector<Quaternion> &out) {
    for (const auto &g : gens)
      out.push_back(apply(g, x));
  };
  return closure_of<Quaternion, QuaternionHash>(
      {v}, step, std::max<std::size_t>(group.order(), 1), LexLess{}, "orbit");
}

TransformGroup stabilizer(const TransformGroup &group, const Quaternion &v) {
  TransformGroup out;
  out.label = "Stab(" + group.label + ")";
  std::vector<char> keep(group.elements.size(), 0);
  parallel_for(group.elements.size(), [&](std::size_t i) {
    keep[i] = apply(group.elements[i], v) == v;
  });
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i])
      out.elements.push_back(group.elements[i]);
  return out;
}

Transform transporter(const TransformGroup &group, const Quaternion &from,
                      const Quaternion &to) {
  const auto &gens = acting_set(group);
  std::unordered_map<Quaternion, Transform, QuaternionHash> reached;
  std::deque<Quaternion> queue{from};
  reached.emplace(from, Transform::identity());
  while (!queue.empty()) {
    Quaternion x = queue.front();
    queue.pop_front();
    if (x == to)
      return reached.at(x);
    const Transform gx = reached.at(x);
    for (const auto &g : gens) {
      Quaternion y = apply(g, x);
      if (reached.emplace(y, compose(g, gx)).second)
        queue.push_back(std::move(y));
    }
  }
  throw BadParameter("points lie in different orbits");
}

OrbitPartition orbit_decompose(const TransformGroup &group,
                               const VertexSet &v) {
  const auto &gens = acting_set(group);
  std::vector<char> done(v.size(), 0);
  OrbitPartition out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (done[i])
      continue;
    auto step = [&](const Quaternion &x, std::vector<Quaternion> &images) {
      for (const auto &g : gens) {
        Quaternion y = apply(g, x);
        if (!contains(v, y))
          throw NotInvariant("vertex set is not invariant under " +
                             group.label);
        images.push_back(std::move(y));
      }
    };
    VertexSet orb = closure_of<Quaternion, QuaternionHash>(
        {v[i]}, step, v.size(), LexLess{}, "orbit");
    for (const auto &x : orb)
      done[*index_of(v, x)] = 1;
    out.sizes.push_back(orb.size());
    out.suborbits.push_back(std::move(orb));
  }
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

} // namespace icosian
