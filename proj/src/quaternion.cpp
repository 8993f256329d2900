#include "icosian/quaternion.hpp"

#include <algorithm>
#include <iterator>

#include "icosian/errors.hpp"

namespace icosian {

Quaternion Quaternion::unit(std::size_t i) {
  Quaternion q;
  q.c_[i] = FieldElement(1);
  return q;
}

bool Quaternion::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const FieldElement &x) { return x.is_zero(); });
}

Quaternion Quaternion::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Quaternion operator+(const Quaternion &p, const Quaternion &q) {
  return {p.c_[0] + q.c_[0], p.c_[1] + q.c_[1], p.c_[2] + q.c_[2],
          p.c_[3] + q.c_[3]};
}

Quaternion operator-(const Quaternion &p, const Quaternion &q) {
  return {p.c_[0] - q.c_[0], p.c_[1] - q.c_[1], p.c_[2] - q.c_[2],
          p.c_[3] - q.c_[3]};
}

Quaternion operator*(const FieldElement &k, const Quaternion &q) {
  return {k * q.c_[0], k * q.c_[1], k * q.c_[2], k * q.c_[3]};
}

std::size_t Quaternion::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto &x : c_)
    h = (h ^ x.hash()) * 0x100000001b3ULL;
  return h;
}

Quaternion qmul(const Quaternion &p, const Quaternion &q) {
  const auto &[p0, p1, p2, p3] = p.components();
  const auto &[q0, q1, q2, q3] = q.components();
  return {p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
          p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
          p0 * q2 + p2 * q0 + p3 * q1 - p1 * q3,
          p0 * q3 + p3 * q0 + p1 * q2 - p2 * q1};
}

Quaternion qconj(const Quaternion &q) { return {q[0], -q[1], -q[2], -q[3]}; }

FieldElement scalar_product(const Quaternion &p, const Quaternion &q) {
  return p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
}

Rational euclid_scalar_product(const Quaternion &p, const Quaternion &q) {
  return euclidean_part(scalar_product(p, q));
}

Quaternion qgalois(const Quaternion &p) {
  return {galois(p[0], Conjugation::Sqrt5), galois(p[1], Conjugation::Sqrt5),
          galois(p[2], Conjugation::Sqrt5), galois(p[3], Conjugation::Sqrt5)};
}

Quaternion qpow(const Quaternion &q, unsigned n) {
  Quaternion r = Quaternion::one();
  for (unsigned i = 0; i < n; ++i)
    r = qmul(r, q);
  return r;
}

std::strong_ordering lex_order(const Quaternion &p, const Quaternion &q) {
  for (std::size_t i = 0; i < 4; ++i) {
    auto c = lex_order(p[i], q[i]);
    if (c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

VertexSet canonical(std::vector<Quaternion> points) {
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

bool contains(const VertexSet &set, const Quaternion &q) {
  return std::binary_search(set.begin(), set.end(), q, LexLess{});
}

std::optional<std::size_t> index_of(const VertexSet &set, const Quaternion &q) {
  auto it = std::lower_bound(set.begin(), set.end(), q, LexLess{});
  if (it == set.end() || !(*it == q))
    return std::nullopt;
  return static_cast<std::size_t>(it - set.begin());
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out), LexLess{});
  return out;
}

VertexSet set_difference(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out), LexLess{});
  return out;
}

VertexSet set_intersection(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out), LexLess{});
  return out;
}

VertexSet scaled(const FieldElement &k, const VertexSet &set) {
  VertexSet out;
  out.reserve(set.size());
  for (const auto &q : set)
    out.push_back(k * q);
  return canonical(std::move(out));
}

Quaternion ray(const Quaternion &q) {
  for (std::size_t i = 0; i < 4; ++i) {
    int s = sign(q[i]);
    if (s != 0) {
      FieldElement scale = invert(s > 0 ? q[i] : -q[i]);
      return scale * q;
    }
  }
  throw DegenerateInput("ray of the zero quaternion");
}

bool projectively_equal(const Quaternion &p, const Quaternion &q) {
  return ray(p) == ray(q);
}

VertexSet ray_set(const VertexSet &set) {
  VertexSet out;
  out.reserve(set.size());
  for (const auto &q : set)
    out.push_back(ray(q));
  return canonical(std::move(out));
}

namespace {

using Matrix = std::vector<std::array<FieldElement, 5>>;

// Gauss-Jordan elimination in place; returns the rank and leaves pivot rows
// reduced. Column 4 is carried along as the augmented right-hand side.
std::size_t eliminate(Matrix &m, std::size_t columns) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero())
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[row], m[pivot]);
    FieldElement inv = invert(m[row][col]);
    for (auto &x : m[row])
      x = inv * x;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero())
        continue;
      FieldElement f = m[r][col];
      for (std::size_t c = 0; c < 5; ++c)
        m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  return row;
}

} // namespace

std::optional<Quaternion> solve_scalar_products(std::span<const Quaternion> rows,
                                                std::span<const FieldElement> rhs) {
  if (rows.size() != 4 || rhs.size() != 4)
    throw BadParameter("solve_scalar_products needs four equations");
  Matrix m(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j)
      m[i][j] = rows[i][j];
    m[i][4] = rhs[i];
  }
  if (eliminate(m, 4) < 4)
    return std::nullopt;
  return Quaternion{m[0][4], m[1][4], m[2][4], m[3][4]};
}

std::size_t rank(std::span<const Quaternion> vectors) {
  Matrix m(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < 4; ++j)
      m[i][j] = vectors[i][j];
  return eliminate(m, 4);
}

} // namespace icosian
