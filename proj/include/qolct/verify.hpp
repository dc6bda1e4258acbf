#pragma once

// Independent cross-checks for the threshold computation: an unrolled
// oracle for the (b, B) table, the ordering inequalities between the table
// quotients, inversion invariance, and a seeded generator of valid inputs.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qolct/exponents.hpp"
#include "qolct/lct.hpp"

namespace qolct {

struct CheckResult {
  std::string name;
  bool hypothesis_met = false;  // false means vacuous, never failed
  bool passed = true;
  std::optional<std::string> witness;
};

struct VerificationReport {
  std::string instance_id;
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

/// The (b, B) table computed from the closed sums
///   B_i^(j) = sum_{k<=j} e_{k-1} q_i^(k) prod_{k<l<=j} p_i^(l)
///   b_i^(j) = prod_{k<=j} p_i^(k) + sum_{k<=j} q_i^(k) prod_{k<l<=j} p_i^(l)
/// rather than the recurrence. Requires g >= 1.
PoleTable oracle_pole_table(const DerivedInvariants& inv);

/// Evaluates every ordering inequality between table quotients over its
/// full hypothesis range. Expects lex-ordered invariants.
VerificationReport check_lemma_inequalities(const DerivedInvariants& inv, const PoleTable& table);

/// When the lex-normalized input has lambda_1 = (1/n_1, 0, ..., 0), compares
/// its threshold with that of the inverted exponents. Vacuous otherwise.
CheckResult check_inversion_invariance(const CharExponents& ce);

struct GeneratorConfig {
  std::size_t d = 2;
  std::size_t g = 2;
  unsigned max_denominator = 12;
  unsigned max_integer_part = 2;
  std::uint64_t seed = 0;
  /// Fraction of draws with lambda_1 forced to (1/k, 0, ..., 0).
  double inversion_form_fraction = 0.2;
  /// Fraction of draws with lambda_1 forced to (1/k, ..., 1/k, 0, ..., 0).
  double uniform_band_fraction = 0.1;
};

/// Draws a valid, lex-normalized instance. Deterministic in the config.
/// Throws GenerationExhausted after 1000 rejected draws at one level, and
/// PreconditionFailed for a config with a zero bound.
CharExponents generate_random(const GeneratorConfig& cfg);

/// Runs every check on one instance (lex-normalizing it first).
VerificationReport verify_instance(const CharExponents& ce, std::string instance_id);

struct CorpusConfig {
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::optional<std::size_t> d;  // drawn from [1, 4] per instance when absent
  std::optional<std::size_t> g;  // drawn from [1, 4] per instance when absent
  unsigned max_denominator = 12;
  unsigned max_integer_part = 2;
  double inversion_form_fraction = 0.2;
  double uniform_band_fraction = 0.1;
};

/// Generator config of the idx-th corpus instance.
GeneratorConfig corpus_instance_config(const CorpusConfig& cfg, std::size_t idx);

struct CheckTally {
  std::size_t applicable = 0;
  std::size_t vacuous = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct CorpusFailure {
  std::string instance_id;
  std::string check;
  std::string witness;
};

struct CorpusSummary {
  std::size_t instances = 0;
  std::map<std::string, CheckTally> tallies;
  std::vector<CorpusFailure> failures;  // capped; see failure_count
  std::size_t failure_count = 0;

  bool ok() const { return failure_count == 0; }
  void merge(const VerificationReport& report);
};

CorpusSummary verify_corpus(const CorpusConfig& cfg);

}  // namespace qolct
