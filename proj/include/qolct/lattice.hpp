#pragma once

// Full-rank lattices in Q^d that live inside (1/m) Z^d for a fixed scale m.
// A lattice is stored as the canonical row-style Hermite normal form of
// m * (its basis), so two lattices at the same scale are equal exactly when
// their matrices are.

#include <cstddef>
#include <vector>

#include "qolct/rational.hpp"

namespace qolct {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Canonical Hermite normal form of the lattice spanned by `rows`.
///
/// The result is d x d, upper triangular with a positive diagonal, and every
/// entry above a pivot lies in [0, pivot). Rows must all have the same
/// length d >= 1 and span a rank-d sublattice of Z^d; otherwise throws
/// RankDeficient (or DimensionMismatch for ragged input).
IntMatrix hnf(const IntMatrix& rows);

class ScaledLattice {
 public:
  /// The lattice generated by rows / scale.
  ScaledLattice(Integer scale, const IntMatrix& rows);

  /// Z^d represented at the given scale.
  static ScaledLattice integer_lattice(std::size_t d, const Integer& scale);

  /// This lattice plus Z*v. Throws PreconditionFailed if scale * v is not
  /// integral.
  ScaledLattice extended(const ExponentVector& v) const;

  std::size_t dimension() const { return basis_.size(); }
  const Integer& scale() const { return scale_; }
  const IntMatrix& basis() const { return basis_; }

  /// det(basis) / scale^d.
  Rational covolume() const;

  /// Whether v is an integer combination of the basis rows divided by the
  /// scale. Vectors whose coordinates do not lie in (1/scale) Z are never
  /// members. Throws DimensionMismatch.
  bool contains(const ExponentVector& v) const;

  /// Row `r` of the basis as a point of Q^d.
  ExponentVector basis_vector(std::size_t r) const;

  friend bool operator==(const ScaledLattice&, const ScaledLattice&) = default;

 private:
  Integer scale_;
  IntMatrix basis_;
};

/// [outer : inner]. Both lattices must share dimension and scale and inner
/// must be contained in outer (NotSublattice otherwise).
Integer lattice_index(const ScaledLattice& outer, const ScaledLattice& inner);

}  // namespace qolct
