#pragma once

// Instance/report documents and the command dispatcher behind the `qolct`
// executable. Rationals travel as strings ("7/6", "0", "4"); integers that
// may be large (n_j, e_j, b, B, p, q) are strings as well.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qolct/exponents.hpp"
#include "qolct/lct.hpp"
#include "qolct/verify.hpp"

namespace qolct {

/// Parses {"d": <int>, "exponents": [[<rational string>, ...], ...]}.
/// Unknown keys are ignored. Errors carry the offending field in the
/// message: ParseError (syntax, with byte offset), InvalidDimension,
/// RaggedRows, MalformedRational, NegativeCoordinate.
CharExponents parse_instance(std::string_view text);

nlohmann::json instance_to_json(const CharExponents& ce);
nlohmann::json invariants_to_json(const DerivedInvariants& inv);
nlohmann::json lct_report_to_json(const CharExponents& input, const Analysis& analysis);
nlohmann::json verification_to_json(const VerificationReport& report);
nlohmann::json corpus_to_json(const CorpusConfig& cfg, const CorpusSummary& summary);

enum class Command { Validate, Lct, Poles, Normalize, Invert, Verify, Generate };

std::optional<Command> command_from_name(std::string_view name);

struct RunOptions {
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> d;
  std::optional<std::size_t> g;
  unsigned max_denominator = 12;
};

struct RunResult {
  int exit_code = 0;
  std::string output;        // stdout payload
  std::string error_output;  // stderr payload (JSON error object)
};

inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitErrorBase = 10;

/// Runs one command. `input` is the instance document text; it is required
/// for every command except generate, and optional for verify (absent means
/// a generated corpus). Never throws for domain errors: they become a
/// nonzero exit code (10 + ErrorCode) and a JSON error object.
RunResult run(Command command, const RunOptions& options, std::optional<std::string_view> input);

}  // namespace qolct
