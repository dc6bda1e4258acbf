#pragma once

// Exact scalars and exponent vectors.
//
// Rational is always stored in lowest terms with a positive denominator, and
// zero is 0/1, so structural equality is value equality.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qolct {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "num" or "num/den" (optional leading '-', decimal digits only).
  /// Throws Error(MalformedRational) otherwise, including a zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "num/den", with the denominator omitted when it is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_;
};

Rational min(const Rational& a, const Rational& b);

/// A point of Q^d with nonnegative coordinates, d >= 1.
class ExponentVector {
 public:
  /// Throws InvalidDimension for an empty list and NegativeCoordinate if any
  /// coordinate is < 0.
  explicit ExponentVector(std::vector<Rational> coords);
  ExponentVector(std::initializer_list<Rational> coords)
      : ExponentVector(std::vector<Rational>(coords)) {}

  /// The zero vector of dimension d.
  static ExponentVector zero(std::size_t d);

  std::size_t dimension() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  /// Number of nonzero coordinates.
  std::size_t support_size() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Rational> coords_;
};

/// a <= b in the componentwise preorder, i.e. b - a has no negative
/// coordinate. Throws DimensionMismatch.
bool componentwise_leq(const ExponentVector& a, const ExponentVector& b);

/// Lexicographic comparison of equal-length sequences. Throws
/// DimensionMismatch on a length mismatch.
std::strong_ordering lex_compare(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace qolct
