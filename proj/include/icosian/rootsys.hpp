#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "icosian/coxeter.hpp"
#include "icosian/quaternion.hpp"

namespace icosian {

enum class Metric { Quaternionic, EuclideanPart };

struct RootSystemData {
  std::string label;
  VertexSet roots;
  std::vector<Quaternion> simple_roots;
  Metric metric = Metric::Quaternionic;
};

/// D4 with simple roots e1, (1-e1-e2-e3)/2, e2, e3 and its weight orbits
/// V1 = O(1000), V2 = O(0010), V3 = O(0001) and the roots T = O(0100).
struct D4Data {
  RootSystemData system;
  VertexSet v1, v2, v3, t;
};

D4Data d4_data();

/// V1 u V2 u V3 u T: 24 short roots of norm 1/2 and 24 long roots of norm 1.
RootSystemData f4_roots();

/// (T,0) + (0,T) + (V1,V3) + (V2,V1) + (V3,V2) with (A,B) = {a + sigma b}.
RootSystemData e8_roots();

/// The 192 roots left after removing T and sigma T, built from the weight
/// orbit pairing {V1 + sigma V3} u {V3 + sigma V2} u {V2 + sigma V1}.
VertexSet e8_minus_24cells();

/// {tau V1 + sigma V2} u {tau V2 + sigma V3} u {tau V3 + sigma V1}: 96
/// points of norm 1 and 96 of norm 2.
VertexSet golden_weight_combination();

/// Unit icosians a1..a4 with (a1,a2) = (a2,a3) = -1/2, (a3,a4) = -tau/2 and
/// the remaining off-diagonal products zero. Found by search over I.
std::array<Quaternion, 4> h4_simple_roots();

/// The reflection group generated by h4_simple_roots().
TransformGroup h4_reflection_group();

/// omega_i with (omega_i, a_j) = delta_ij / 2.
std::array<Quaternion, 4> h4_fundamental_weights();

/// Orbit of sum_{i in mask} omega_i under W(H4). Bit 3 of the mask is
/// omega_1, so the mask 0b1000 reads as "1000". Throws BadParameter on 0.
VertexSet h4_orbit(unsigned mask);

/// Four-character form of a weight mask, e.g. 0b0110 -> "0110".
std::string mask_string(unsigned mask);

struct WeightOrbitReport {
  unsigned mask = 0;
  std::size_t orbit_size = 0;
  std::vector<std::size_t> decomposition; // sorted ascending
  // |suborbit| * |stabilizer of a representative in W(D4):C3| == 576 for
  // every suborbit.
  bool orbit_stabilizer_ok = false;
};

WeightOrbitReport weight_orbit_report(unsigned mask);

/// Reports for all 15 nonzero masks in increasing mask order.
std::vector<WeightOrbitReport> appendix_decompositions();

/// "3600 = 144+4(288)+4(576)" style rendering, parts ascending.
std::string format_decomposition(std::size_t size,
                                 const std::vector<std::size_t> &parts);

struct AppendixMatch {
  int line = 0;
  unsigned mask = 0;
  bool matched = false;
  bool printed_sum_consistent = true; // does the printed line add up?
  bool exact = false;                 // computed multiset == printed one
  std::string printed;
  std::string computed;
};

/// Matches the published decomposition lines against computed reports by
/// (size, multiset). Lines whose printed parts do not sum to the size are
/// matched afterwards to a remaining report of the same size.
std::vector<AppendixMatch>
match_appendix(const std::vector<WeightOrbitReport> &reports);

} // namespace icosian
