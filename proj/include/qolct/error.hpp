#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qolct {

/// Stable, machine-readable failure categories. The numeric values are part
/// of the CLI contract (exit status = 10 + value) and must not be reordered.
enum class ErrorCode : int {
  DimensionMismatch = 1,
  NegativeCoordinate = 2,
  NotWeaklyIncreasing = 3,
  InLattice = 4,
  RankDeficient = 5,
  NotSublattice = 6,
  NonIntegerIndex = 7,
  PreconditionFailed = 8,
  NotLexOrdered = 9,
  MalformedRational = 10,
  RaggedRows = 11,
  InvalidDimension = 12,
  ParseError = 13,
  GenerationExhausted = 14,
  InternalInconsistency = 15,
  IoError = 16,
  UsageError = 17,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qolct
