#pragma once

// Reference listings transcribed literally from their printed form: the
// binary icosahedral class table (expanded from its sign/permutation patterns),
// the W(D4):C3 decomposition lines of the W(H4) orbits, and the local data of
// the snub 24-cell and its dual at p = (tau + e1 + sigma e3)/2. Verification
// suites compare computed results against these; nothing here is derived.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "icosian/qgroups.hpp"

namespace icosian::reference {

using icosian::FieldElement;
using icosian::Quaternion;
using icosian::VertexSet;

struct ClassRow {
  std::string label;
  unsigned element_order;
  VertexSet members;
};

/// Expands (s0*a0 + s1*a1 e_i1 + ...)/2 over all sign choices of the entries
/// marked free. Coefficient slots not named are zero.
inline void expand_half(std::vector<Quaternion> &out,
                        const std::array<FieldElement, 4> &base,
                        const std::array<bool, 4> &free_sign) {
  for (int mask = 0; mask < 16; ++mask) {
    std::array<FieldElement, 4> c = base;
    bool skip = false;
    for (int i = 0; i < 4; ++i) {
      if ((mask >> i) & 1) {
        if (!free_sign[i]) {
          skip = true;
          break;
        }
        c[i] = -c[i];
      }
    }
    if (!skip)
      out.push_back(icosian::half(c[0], c[1], c[2], c[3]));
  }
}

/// Conjugacy classes of the binary icosahedral group as printed:
/// order, label and the member patterns of each row.
inline std::vector<ClassRow> binary_icosahedral_classes() {
  const FieldElement tau = FieldElement::tau(), sigma = FieldElement::sigma();
  const FieldElement one(1);
  std::vector<ClassRow> rows;
  auto place = [](std::size_t a, const FieldElement &x, std::size_t b,
                  const FieldElement &y, const FieldElement &re) {
    std::array<FieldElement, 4> c;
    c[0] = re;
    c[a] = x;
    c[b] = y;
    return c;
  };
  const std::array<bool, 4> imag_free = {false, true, true, true};

  auto golden_row = [&](const std::string &label, unsigned order,
                        const FieldElement &re, const FieldElement &first,
                        const FieldElement &second,
                        std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    std::vector<Quaternion> out;
    for (auto [a, b] : pairs)
      expand_half(out, place(a, first, b, second, re), imag_free);
    rows.push_back({label, order, icosian::canonical(std::move(out))});
  };

  rows.push_back({"1", 1, {Quaternion::one()}});
  rows.push_back({"-1", 2, {-Quaternion::one()}});
  // (tau +- e_a +- sigma e_b)/2 with (a, b) = (1,3), (2,1), (3,2)
  golden_row("12+", 10, tau, one, sigma, {{1, 3}, {2, 1}, {3, 2}});
  golden_row("12-", 5, -tau, one, sigma, {{1, 3}, {2, 1}, {3, 2}});
  // (sigma +- e_a +- tau e_b)/2 with (a, b) = (1,2), (2,3), (3,1)
  golden_row("12'+", 10, sigma, one, tau, {{1, 2}, {2, 3}, {3, 1}});
  golden_row("12'-", 5, -sigma, one, tau, {{1, 2}, {2, 3}, {3, 1}});

  for (int s : {1, -1}) {
    std::vector<Quaternion> out;
    expand_half(out, {FieldElement(s), one, one, one}, imag_free);
    // (+-1 +- tau e_a +- sigma e_b)/2 with (a, b) = (1,2), (2,3), (3,1)
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 2}, {2, 3}, {3, 1}})
      expand_half(out, place(a, tau, b, sigma, FieldElement(s)), imag_free);
    rows.push_back({s > 0 ? "20+" : "20-", s > 0 ? 6u : 3u,
                    icosian::canonical(std::move(out))});
  }

  std::vector<Quaternion> thirty;
  for (std::size_t i = 1; i <= 3; ++i) {
    thirty.push_back(Quaternion::unit(i));
    thirty.push_back(-Quaternion::unit(i));
  }
  // (+-sigma e_a +- tau e_b +- e_c)/2 with (a, b, c) cyclic from (1, 2, 3)
  for (std::size_t a = 1; a <= 3; ++a) {
    std::size_t b = a % 3 + 1, c = b % 3 + 1;
    std::array<FieldElement, 4> base;
    base[a] = sigma;
    base[b] = tau;
    base[c] = one;
    expand_half(thirty, base, imag_free);
  }
  rows.push_back({"30", 4, icosian::canonical(std::move(thirty))});
  return rows;
}

/// A published decomposition line "size = k1(s1) + k2(s2) + ...".
struct DecompositionLine {
  int line;
  std::size_t size;
  std::map<std::size_t, int> parts; // suborbit size -> multiplicity
};

inline std::vector<DecompositionLine> decomposition_lines() {
  return {
      {1, 600, {{192, 1}, {96, 1}, {288, 1}, {24, 1}}},
      {2, 1200, {{144, 1}, {576, 1}, {288, 1}, {96, 2}}},
      {3, 720, {{288, 2}, {144, 1}}},
      {4, 120, {{24, 1}, {96, 1}}},
      {5, 3600, {{576, 5}, {288, 4}, {144, 1}}},
      {6, 2400, {{576, 2}, {96, 2}, {288, 3}, {192, 1}}},
      {7, 3600, {{144, 1}, {576, 4}, {288, 4}}},
      {8, 1440, {{288, 5}}},
      {9, 2400, {{288, 3}, {576, 2}, {96, 2}, {192, 1}}},
      {10, 3600, {{288, 4}, {576, 4}, {144, 1}}},
      {11, 7200, {{576, 10}, {288, 5}}},
      {12, 7200, {{288, 5}, {576, 10}}},
      {13, 7200, {{288, 5}, {576, 10}}},
      {14, 7200, {{576, 10}, {288, 5}}},
      {15, 14400, {{576, 25}}},
  };
}

/// The nine neighbours q1..q9 of p.
inline std::vector<Quaternion> snub_neighbors() {
  const FieldElement tau = FieldElement::tau(), sigma = FieldElement::sigma();
  using icosian::half;
  return {half(-sigma, tau, 0, -1), half(tau, -sigma, -1, 0),
          half(tau, -sigma, 1, 0),  half(tau, 0, sigma, -1),
          half(tau, 0, -sigma, -1), half(1, -sigma, 0, -tau),
          half(tau, 1, 0, -sigma),  half(1, tau, -sigma, 0),
          half(1, tau, sigma, 0)};
}

/// The five tetrahedra P(1)..P(5) at p with their centers c1..c5. The
/// printed prefactor 1/(2 sqrt2) is applied to c2..c5.
struct TetraRow {
  VertexSet vertices;
  Quaternion center;
};

inline std::vector<TetraRow> tetrahedra_at_p() {
  const FieldElement tau = FieldElement::tau(), sigma = FieldElement::sigma();
  const FieldElement r2 = FieldElement::sqrt2(), zero;
  const FieldElement k = icosian::Rational(1, 4) * r2;
  const Quaternion p = icosian::canonical_p();
  const auto q = snub_neighbors();
  using icosian::canonical;
  return {{canonical({p, q[6], q[7], q[8]}),
           (icosian::Rational(1, 2) * r2) *
               (Quaternion::one() + Quaternion::unit(1))},
          {canonical({p, q[3], q[4], q[5]}),
           k * Quaternion{tau - sigma, -sigma, zero, -tau}},
          {canonical({p, q[2], q[6], q[7]}),
           k * Quaternion{tau - sigma, tau, -sigma, zero}},
          {canonical({p, q[0], q[7], q[8]}),
           k * Quaternion{tau, tau - sigma, zero, sigma}},
          {canonical({p, q[1], q[6], q[8]}),
           k * Quaternion{tau - sigma, tau, sigma, zero}}};
}

/// Vertex figure coordinates (x, e_k p) of q1..q9 with the overall 1/2
/// cleared, in printed order.
inline std::vector<std::array<FieldElement, 3>> vertex_figure_coords() {
  const FieldElement s = FieldElement::sigma();
  return {{1, 0, s},  {-1, 0, s}, {1, 0, -s}, {s, 1, 0},  {s, -1, 0},
          {0, s, 1},  {-s, -1, 0}, {0, -s, 1}, {0, -s, -1}};
}

/// Dual cell coordinates around p with 1/(2 sqrt2) cleared, in the order
/// (tau/sqrt2) 1, (tau/sqrt2) t1, (tau/sqrt2) t2, c1, c2, c3, c4, c5.
inline std::vector<std::array<FieldElement, 3>> dual_cell_coords() {
  const FieldElement tau = FieldElement::tau(), s = FieldElement::sigma();
  return {{-tau, 0, 1},   {0, -1, -tau},  {1, tau, 0},   {-s, s, -s},
          {s, -s, s},     {s * s, 0, 1},  {1, -s * s, 0}, {0, -1, s * s}};
}

} // namespace icosian::reference
