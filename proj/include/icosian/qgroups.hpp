#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "icosian/quaternion.hpp"

namespace icosian {

/// Finite group of unit quaternions, stored as a canonical vertex set.
struct QuaternionGroup {
  VertexSet elements;
  std::string label;

  std::size_t order() const { return elements.size(); }
  bool contains(const Quaternion &q) const {
    return icosian::contains(elements, q);
  }
};

/// (a q0 + b q1 + c q2 + d q3) / 2 with field coefficients; the ubiquitous
/// half-coordinate form of the icosians.
Quaternion half(const FieldElement &a, const FieldElement &b,
                const FieldElement &c, const FieldElement &d);

/// p = (tau + e1 + sigma e3) / 2, the fifth-root seed used throughout.
Quaternion canonical_p();

/// Smallest multiplicatively closed set containing `generators` and 1.
/// Throws CapExceeded past `cap` elements.
QuaternionGroup closure(const std::vector<Quaternion> &generators,
                        std::size_t cap, std::string label = {});

/// Weight orbit V_k (k = 1, 2, 3) of D4: (+-1 +-e_k)/2 and (+-e_i +-e_j)/2.
VertexSet d4_vector_orbit(int k);

/// T = {+-1, +-e_i, (+-1 +-e1 +-e2 +-e3)/2}, order 24.
QuaternionGroup binary_tetrahedral();

/// T' = sqrt2 (V1 u V2 u V3): the 24 unit quaternions of the dual 24-cell.
VertexSet t_prime();

/// Closure of T u T', order 48.
QuaternionGroup binary_octahedral();

/// I = union over j of p^j T, order 120.
QuaternionGroup binary_icosahedral();

/// Multiplicative order of a unit quaternion (throws CapExceeded past cap).
unsigned element_order(const Quaternion &q, unsigned cap = 1000);

struct ConjugacyClass {
  unsigned element_order = 0;
  VertexSet members;
  std::size_t size() const { return members.size(); }
};

/// Classes sorted by decreasing real part, ties by canonical first member.
struct ConjugacyClassTable {
  std::vector<ConjugacyClass> classes;
};

ConjugacyClassTable conjugacy_classes(const QuaternionGroup &group);

/// Row label of a binary icosahedral class ("1", "-1", "12+", "12-", "12'+",
/// "12'-", "20+", "20-", "30"), determined by the shared real part.
std::string icosahedral_class_label(const ConjugacyClass &cls);

/// The class 12+ of I (real part tau/2): an icosahedron around 1.
VertexSet class_12_plus();

} // namespace icosian
