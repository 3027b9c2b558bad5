#pragma once

#include "echar/engine.hpp"

namespace echar {

/// Hyperplane arrangement over Q: affine linear forms, pairwise defining
/// distinct hyperplanes.
struct Arrangement {
  RingPtr ring;                // field must be Q
  std::vector<Poly> forms;     // total degree exactly 1

  static Arrangement from_forms(RingPtr ring, std::vector<Poly> forms);
  std::size_t ambient_dim() const { return ring->vars.size(); }
};

/// A flat: nonempty affine subspace obtained as an intersection of
/// hyperplanes, stored as the reduced row echelon form of [A | b].
struct Flat {
  std::vector<std::vector<FieldScalar>> rref;  // rows over Q, width n+1
  int dim = 0;
  std::vector<std::size_t> hyperplanes;  // all i with flat inside H_i
  std::string key;                       // canonical form of rref
};

/// All nonempty intersections ordered by reverse inclusion; index 0 is the
/// ambient space.
struct IntersectionLattice {
  std::vector<Flat> flats;
  /// containment[i][j] true iff flat i contains flat j (i "below" j).
  std::vector<std::vector<bool>> contains;
};

IntersectionLattice intersection_lattice(const Arrangement& A);

/// Moebius values in lattice order: mu(ambient) = 1, partial sums vanish.
std::vector<std::int64_t> mobius_values(const IntersectionLattice& L);

MotivePoly characteristic_polynomial(const Arrangement& A);

/// Deletion of H and restriction to H; returns (chi(A), chi(A') - chi(A'')).
std::pair<MotivePoly, MotivePoly> deletion_restriction_check(
    const Arrangement& A, std::size_t H);

/// Engine value F(product of forms) versus L^n - chi(A, L).
std::pair<MotivePoly, MotivePoly> arrangement_motive_identity(
    const Arrangement& A, const ProjectionConfig& cfg);

}  // namespace echar
