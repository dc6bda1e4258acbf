#pragma once

// Log canonical threshold of an irreducible quasi-ordinary hypersurface from
// its characteristic exponents, and the candidate poles of its local motivic
// zeta function.
//
// Each exponent coordinate contributes an integer pair (b, B) per level j,
// built from the alpha table by
//   b^(1) = p^(1) + q^(1),        b^(j) = p^(j) b^(j-1) + q^(j),
//   B^(1) = e_0 q^(1),            B^(j) = p^(j) B^(j-1) + e_{j-1} q^(j).
// The candidate set is {1} together with every b_i^(j) / B_i^(j) for
// 1 <= i <= ell_j; the threshold is its minimum.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qolct/exponents.hpp"
#include "qolct/rational.hpp"

namespace qolct {

/// (b, B) for one coordinate at one level: b - 1 is the order of the
/// Jacobian and B the order of f along the matching exceptional divisor.
struct DivisorPair {
  Integer log_discrepancy;  // b
  Integer multiplicity;     // B

  /// B == 0 happens exactly for coordinates outside the support of lambda_j.
  bool contributes() const { return multiplicity != 0; }
  /// b / B; requires contributes().
  Rational quotient() const { return Rational(log_discrepancy, multiplicity); }

  friend bool operator==(const DivisorPair&, const DivisorPair&) = default;
};

struct PoleTable {
  std::vector<std::vector<DivisorPair>> pairs;  // pairs[j-1][i-1]
  std::vector<Rational> candidate_set;          // ascending, deduplicated, contains 1

  const DivisorPair& at(std::size_t j, std::size_t i) const { return pairs.at(j - 1).at(i - 1); }

  friend bool operator==(const PoleTable&, const PoleTable&) = default;
};

enum class ThresholdCase { Smooth, Case1, Case2, Case3 };

std::string_view case_name(ThresholdCase c) noexcept;

struct AValues {
  Rational a1;
  std::optional<Rational> a2;  // g > 1
  std::optional<Rational> a3;  // g > 1 and ell_1 < ell_2
};

struct LctReport {
  Rational lct{1};
  ThresholdCase case_tag = ThresholdCase::Smooth;
  std::optional<AValues> a_values;  // absent for the smooth instance
  bool log_canonical = true;
  std::vector<Rational> pole_candidates;  // ascending
  std::vector<std::size_t> permutation;   // column permutation applied before evaluation
};

/// The (b, B) table and the candidate set. Requires g >= 1
/// (PreconditionFailed otherwise).
PoleTable pole_table(const DerivedInvariants& inv);

/// A1 = (1 + l11) / (e_0 l11),
/// A2 = n_1 (1 + l21) / (e_1 (n_1 (1 + l21) - 1))            when g > 1,
/// A3 = (1 + l2k) / (e_1 l2k) with k = ell_1 + 1               when ell_1 < ell_2.
/// Each value is cross-checked against the matching table quotient; a
/// disagreement throws InternalInconsistency. Requires lex-ordered input and
/// g >= 1.
AValues a_values(const DerivedInvariants& inv);

/// Closed-form threshold:
///   min{1, A1}      if lambda_{1,1} != 1/n_1 or g = 1     (Case1)
///   min{A2, A3}     if lambda_{1,1} == 1/n_1, g > 1, ell_1 < ell_2  (Case2)
///   A2              if lambda_{1,1} == 1/n_1, g > 1, ell_1 = ell_2  (Case3)
/// g = 0 gives lct = 1 tagged Smooth. Throws NotLexOrdered on unsorted input.
LctReport lct_closed_form(const DerivedInvariants& inv);

/// Minimum of the candidate set.
Rational lct_min(const PoleTable& table);

/// Structural log-canonicity test: g = 1 and the nonzero coordinates of
/// lambda_1 either all lie in {1, 1/2} or all equal 1/n_1 (g = 0 is log
/// canonical). Throws InternalInconsistency if this disagrees with
/// lct_closed_form(inv).lct == 1.
bool is_log_canonical(const DerivedInvariants& inv);

/// {-b/B : b/B in the candidate set}, ascending.
std::vector<Rational> pole_candidates(const PoleTable& table);

/// Full pipeline on arbitrary input: lex-normalize, validate, evaluate.
struct Analysis {
  NormalizedExponents normalized;
  DerivedInvariants invariants;
  std::optional<PoleTable> table;  // absent for g = 0
  LctReport report;
};

Analysis analyze(const CharExponents& ce);

}  // namespace qolct
