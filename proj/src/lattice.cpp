#include "qolct/lattice.hpp"

#include <utility>

#include "qolct/error.hpp"

namespace qolct {

namespace {

// row_a <- s*row_a + t*row_b, row_b <- u*row_a + v*row_b (simultaneously).
void combine_rows(IntVector& row_a, IntVector& row_b, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t k = 0; k < row_a.size(); ++k) {
    Integer a = row_a[k];
    Integer b = row_b[k];
    row_a[k] = s * a + t * b;
    row_b[k] = u * a + v * b;
  }
}

void subtract_multiple(IntVector& target, const IntVector& source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < target.size(); ++k) target[k] -= factor * source[k];
}

}  // namespace

IntMatrix hnf(const IntMatrix& rows) {
  if (rows.empty()) throw Error(ErrorCode::RankDeficient, "hnf: no generators");
  const std::size_t d = rows.front().size();
  if (d == 0) throw Error(ErrorCode::InvalidDimension, "hnf: zero-dimensional rows");
  for (const auto& r : rows) {
    if (r.size() != d) throw Error(ErrorCode::DimensionMismatch, "hnf: rows of different length");
  }
  if (rows.size() < d) throw Error(ErrorCode::RankDeficient, "hnf: fewer generators than dimension");

  IntMatrix m = rows;
  for (std::size_t col = 0; col < d; ++col) {
    // Clear column `col` below the pivot with unimodular 2x2 transforms
    // built from the extended gcd.
    for (std::size_t r = col + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const Integer a = m[col][col];
      const Integer b = m[r][col];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer a_g = a / g;
      const Integer b_g = b / g;
      // [[s, t], [-b/g, a/g]] has determinant 1.
      combine_rows(m[col], m[r], s, t, Integer(-b_g), a_g);
    }
    if (m[col][col] == 0) {
      throw Error(ErrorCode::RankDeficient, "hnf: generators do not span a full-rank lattice");
    }
    if (m[col][col] < 0) {
      for (auto& x : m[col]) x = -x;
    }
    const Integer& pivot = m[col][col];
    for (std::size_t r = 0; r < col; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), pivot.get_mpz_t());
      subtract_multiple(m[r], m[col], q);
    }
  }
  m.resize(d);
  return m;
}

ScaledLattice::ScaledLattice(Integer scale, const IntMatrix& rows)
    : scale_(std::move(scale)), basis_(hnf(rows)) {
  if (scale_ <= 0) throw Error(ErrorCode::PreconditionFailed, "lattice scale must be positive");
}

ScaledLattice ScaledLattice::integer_lattice(std::size_t d, const Integer& scale) {
  IntMatrix rows(d, IntVector(d, Integer(0)));
  for (std::size_t i = 0; i < d; ++i) rows[i][i] = scale;
  return ScaledLattice(scale, rows);
}

ScaledLattice ScaledLattice::extended(const ExponentVector& v) const {
  if (v.dimension() != dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "lattice and vector dimensions differ");
  }
  IntVector row(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    Rational scaled = v[i] * Rational(scale_);
    if (!scaled.is_integer()) {
      throw Error(ErrorCode::PreconditionFailed,
                  "generator has a denominator not dividing the lattice scale");
    }
    row[i] = scaled.numerator();
  }
  IntMatrix rows = basis_;
  rows.push_back(std::move(row));
  return ScaledLattice(scale_, rows);
}

Rational ScaledLattice::covolume() const {
  Integer det = 1;
  for (std::size_t i = 0; i < dimension(); ++i) det *= basis_[i][i];
  Integer volume_scale;
  mpz_pow_ui(volume_scale.get_mpz_t(), scale_.get_mpz_t(), dimension());
  return Rational(det, volume_scale);
}

bool ScaledLattice::contains(const ExponentVector& v) const {
  if (v.dimension() != dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "lattice and vector dimensions differ");
  }
  IntVector target(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    Rational scaled = v[i] * Rational(scale_);
    if (!scaled.is_integer()) return false;
    target[i] = scaled.numerator();
  }
  // Solve x * basis = target column by column; the basis is upper triangular.
  IntVector x(dimension());
  for (std::size_t c = 0; c < dimension(); ++c) {
    Integer rest = target[c];
    for (std::size_t r = 0; r < c; ++r) rest -= x[r] * basis_[r][c];
    if (!mpz_divisible_p(rest.get_mpz_t(), basis_[c][c].get_mpz_t())) return false;
    x[c] = rest / basis_[c][c];
  }
  return true;
}

ExponentVector ScaledLattice::basis_vector(std::size_t r) const {
  std::vector<Rational> coords;
  coords.reserve(dimension());
  for (const auto& x : basis_.at(r)) coords.emplace_back(x, scale_);
  return ExponentVector(std::move(coords));
}

Integer lattice_index(const ScaledLattice& outer, const ScaledLattice& inner) {
  if (outer.dimension() != inner.dimension() || outer.scale() != inner.scale()) {
    throw Error(ErrorCode::DimensionMismatch, "lattices differ in dimension or scale");
  }
  for (std::size_t r = 0; r < inner.dimension(); ++r) {
    if (!outer.contains(inner.basis_vector(r))) {
      throw Error(ErrorCode::NotSublattice, "inner lattice is not contained in outer lattice");
    }
  }
  Rational ratio = inner.covolume() / outer.covolume();
  if (!ratio.is_integer()) {
    throw Error(ErrorCode::NonIntegerIndex, "covolume ratio " + ratio.to_string() + " is not an integer");
  }
  return ratio.numerator();
}

}  // namespace qolct
