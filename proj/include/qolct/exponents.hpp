#pragma once

// Characteristic exponents of an irreducible quasi-ordinary branch and the
// invariants derived from the lattice chain
//   M_0 = Z^d,  M_j = M_{j-1} + Z lambda_j.

#include <cstddef>
#include <vector>

#include "qolct/lattice.hpp"
#include "qolct/rational.hpp"

namespace qolct {

struct CharExponents {
  /// Throws InvalidDimension if d == 0 and DimensionMismatch if some
  /// exponent does not have d coordinates.
  CharExponents(std::size_t d, std::vector<ExponentVector> lambdas);

  std::size_t d;
  std::vector<ExponentVector> lambdas;  // lambda_1 .. lambda_g

  std::size_t g() const { return lambdas.size(); }
  bool smooth() const { return lambdas.empty(); }
  /// lambda_j for 1 <= j <= g.
  const ExponentVector& lambda(std::size_t j) const { return lambdas.at(j - 1); }

  friend bool operator==(const CharExponents&, const CharExponents&) = default;
};

/// The coordinate q/p of some alpha_j, with gcd(p, q) = 1 and p >= 1.
struct CoprimePair {
  Integer p;
  Integer q;

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;
};

struct DerivedInvariants {
  CharExponents exponents;
  Integer scale;                               // lcm of all exponent denominators
  std::vector<Integer> n;                      // n[j-1] = n_j = [M_{j-1} : M_j]
  std::vector<Integer> e;                      // e[j] = e_j, e_0 = n_1 ... n_g
  std::vector<std::size_t> ell;                // ell[j] = number of nonzero coords of lambda_j
  std::vector<std::vector<CoprimePair>> alpha; // alpha[j-1][i-1] = (p_i^(j), q_i^(j))

  std::size_t d() const { return exponents.d; }
  std::size_t g() const { return exponents.g(); }

  // 1-based accessors matching the usual indexing.
  const Integer& n_at(std::size_t j) const { return n.at(j - 1); }
  const CoprimePair& alpha_at(std::size_t j, std::size_t i) const { return alpha.at(j - 1).at(i - 1); }
};

/// Checks the exponent list (weakly increasing, lambda_j not in M_{j-1}) and
/// computes n_j, e_j, ell_j and the alpha table.
///
/// Errors: NotWeaklyIncreasing, InLattice (message names the offending j).
/// g = 0 is accepted and yields e_0 = 1 with empty tables.
DerivedInvariants validate(const CharExponents& ce);

struct NormalizedExponents {
  CharExponents exponents;
  /// permutation[k] is the 0-based original column now found at position k.
  std::vector<std::size_t> permutation;
};

/// Reorders coordinates so the column sequences (lambda_{1,i}, ...,
/// lambda_{g,i}) are lexicographically nonincreasing in i. Tied columns keep
/// their original relative order.
NormalizedExponents lex_normalize(const CharExponents& ce);

bool is_lex_ordered(const CharExponents& ce);

/// Lex-ordered, and lambda_1 is not of the form (a, 0, ..., 0) with a < 1.
bool is_normalized(const CharExponents& ce);

/// Whether lambda_1 = (1/n_1, 0, ..., 0), the form accepted by invert().
bool has_inversion_form(const DerivedInvariants& inv);

/// Inversion for a branch with lambda_1 = (1/n_1, 0, ..., 0): returns the
/// g - 1 exponents
///   lambda'_i = (n_1 (1 + lambda_{i+1,1} - 1/n_1), lambda_{i+1,2}, ..., lambda_{i+1,d}),
/// lex-normalized and validated. For g = 1 the result is the smooth instance.
/// Throws PreconditionFailed if lambda_1 does not have that form.
CharExponents invert(const CharExponents& ce);

}  // namespace qolct
