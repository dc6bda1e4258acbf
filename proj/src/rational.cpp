#include "qolct/rational.hpp"

#include <algorithm>

#include "qolct/error.hpp"

namespace qolct {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NegativeCoordinate: return "negative_coordinate";
    case ErrorCode::NotWeaklyIncreasing: return "not_weakly_increasing";
    case ErrorCode::InLattice: return "in_lattice";
    case ErrorCode::RankDeficient: return "rank_deficient";
    case ErrorCode::NotSublattice: return "not_sublattice";
    case ErrorCode::NonIntegerIndex: return "non_integer_index";
    case ErrorCode::PreconditionFailed: return "precondition_failed";
    case ErrorCode::NotLexOrdered: return "not_lex_ordered";
    case ErrorCode::MalformedRational: return "malformed_rational";
    case ErrorCode::RaggedRows: return "ragged_rows";
    case ErrorCode::InvalidDimension: return "invalid_dimension";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::GenerationExhausted: return "generation_exhausted";
    case ErrorCode::InternalInconsistency: return "internal_inconsistency";
    case ErrorCode::IoError: return "io_error";
    case ErrorCode::UsageError: return "usage_error";
  }
  return "unknown";
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw Error(ErrorCode::MalformedRational, "zero denominator");
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::MalformedRational, "division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool is_decimal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::MalformedRational,
                 "malformed rational \"" + std::string(text) + "\"");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!is_decimal(num_text) || !is_decimal(den_text)) throw fail();

  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) throw fail();
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

ExponentVector::ExponentVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::InvalidDimension, "exponent vector must have d >= 1");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].sign() < 0) {
      throw Error(ErrorCode::NegativeCoordinate,
                  "coordinate " + std::to_string(i + 1) + " is negative: " + coords_[i].to_string());
    }
  }
}

ExponentVector ExponentVector::zero(std::size_t d) {
  return ExponentVector(std::vector<Rational>(d, Rational(0)));
}

std::size_t ExponentVector::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(coords_.begin(), coords_.end(), [](const Rational& r) { return !r.is_zero(); }));
}

bool componentwise_leq(const ExponentVector& a, const ExponentVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "componentwise comparison of vectors of different length");
  }
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

std::strong_ordering lex_compare(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "lexicographic comparison of sequences of different length");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace qolct
