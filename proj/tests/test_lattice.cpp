#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <random>
#include <utility>
#include <vector>

#include "qolct/error.hpp"
#include "qolct/lattice.hpp"

using namespace qolct;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

IntMatrix to_int(const Rows& rows) {
  IntMatrix out;
  for (const auto& r : rows) {
    IntVector v;
    for (auto x : r) v.emplace_back(static_cast<long>(x));
    out.push_back(std::move(v));
  }
  return out;
}

// Test oracle: HNF by plain Euclidean row reduction (repeatedly subtract
// multiples of the row with the smallest nonzero pivot entry). Shares
// nothing with the extended-gcd implementation.
Rows naive_hnf(Rows m) {
  const std::size_t d = m.front().size();
  for (std::size_t col = 0; col < d; ++col) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = col; r < m.size(); ++r) {
        if (m[r][col] != 0 && (best == m.size() || std::llabs(m[r][col]) < std::llabs(m[best][col]))) best = r;
      }
      REQUIRE(best != m.size());
      std::swap(m[col], m[best]);
      bool done = true;
      for (std::size_t r = col + 1; r < m.size(); ++r) {
        std::int64_t f = m[r][col] / m[col][col];
        for (std::size_t k = 0; k < d; ++k) m[r][k] -= f * m[col][k];
        if (m[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (m[col][col] < 0) {
      for (auto& x : m[col]) x = -x;
    }
    for (std::size_t r = 0; r < col; ++r) {
      std::int64_t f = m[r][col] / m[col][col];
      if (m[r][col] - f * m[col][col] < 0) --f;
      for (std::size_t k = 0; k < d; ++k) m[r][k] -= f * m[col][k];
    }
  }
  m.resize(d);
  return m;
}

ExponentVector v(std::initializer_list<Rational> xs) { return ExponentVector(xs); }

// Example 1 chain at scale 6: M_0 = Z^2, M_1 = M_0 + Z(1/3,1/3), M_2 = M_1 + Z(7/6,2/3).
ScaledLattice m0() { return ScaledLattice::integer_lattice(2, Integer(6)); }
ScaledLattice m1() { return m0().extended(v({Rational(1, 3), Rational(1, 3)})); }
ScaledLattice m2() { return m1().extended(v({Rational(7, 6), Rational(2, 3)})); }

}  // namespace

TEST_CASE("hnf of small generator sets") {
  CHECK(hnf(to_int({{1, 0}, {0, 1}})) == to_int({{1, 0}, {0, 1}}));
  Rows ex1 = {{6, 0}, {0, 6}, {2, 2}};
  Rows ex2 = {{6, 0}, {0, 6}, {2, 2}, {7, 4}};
  CHECK(naive_hnf(ex1) == Rows{{2, 2}, {0, 6}});
  CHECK(naive_hnf(ex2) == Rows{{1, 4}, {0, 6}});
  CHECK(hnf(to_int(ex1)) == to_int({{2, 2}, {0, 6}}));
  CHECK(hnf(to_int(ex2)) == to_int({{1, 4}, {0, 6}}));
}

TEST_CASE("hnf rejects degenerate input") {
  auto code_of = [](const IntMatrix& rows) {
    try {
      hnf(rows);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::InternalInconsistency;
  };
  CHECK(code_of({}) == ErrorCode::RankDeficient);
  CHECK(code_of(to_int({{1, 0}, {2, 0}})) == ErrorCode::RankDeficient);
  CHECK(code_of(to_int({{1, 0}})) == ErrorCode::RankDeficient);
  CHECK(code_of(to_int({{1, 0}, {0}})) == ErrorCode::DimensionMismatch);
}

TEST_CASE("covolume") {
  CHECK(m0().covolume() == Rational(1));
  CHECK(m1().basis() == to_int({{2, 2}, {0, 6}}));
  CHECK(m1().covolume() == Rational(1, 3));
  CHECK(m2().basis() == to_int({{1, 4}, {0, 6}}));
  CHECK(m2().covolume() == Rational(1, 6));
}

TEST_CASE("membership") {
  CHECK(m1().contains(ExponentVector::zero(2)));
  CHECK(m2().contains(ExponentVector::zero(2)));
  CHECK(m1().contains(v({Rational(1), Rational(1)})));
  CHECK_FALSE(m1().contains(v({Rational(7, 6), Rational(2, 3)})));
  CHECK(m2().contains(v({Rational(7, 6), Rational(2, 3)})));
  CHECK_FALSE(m2().contains(v({Rational(1, 7), Rational(0)})));  // denominator does not divide the scale
  CHECK_THROWS_AS(m1().contains(ExponentVector::zero(3)), Error);
}

TEST_CASE("lattice index") {
  CHECK(lattice_index(m1(), m1()) == 1);
  CHECK(lattice_index(m1(), m0()) == 3);
  CHECK(lattice_index(m2(), m1()) == 2);
  try {
    lattice_index(m0(), m1());
    FAIL("superlattice accepted as sublattice");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotSublattice);
  }
  CHECK_THROWS_AS(lattice_index(m1(), ScaledLattice::integer_lattice(2, Integer(3))), Error);
}

TEST_CASE("hnf properties on random generator sets") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> entry(-12, 12);
  std::uniform_int_distribution<int> dims(1, 4), extra(0, 3), mult(-3, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = static_cast<std::size_t>(dims(rng));
    const std::int64_t scale = 12;
    Rows rows;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::int64_t> r(d, 0);
      r[i] = scale;
      rows.push_back(r);
    }
    for (int k = extra(rng); k > 0; --k) {
      std::vector<std::int64_t> r(d);
      for (auto& x : r) x = entry(rng);
      rows.push_back(r);
    }
    const IntMatrix h = hnf(to_int(rows));
    CAPTURE(trial);
    CHECK(h == to_int(naive_hnf(rows)));
    // Idempotence.
    CHECK(hnf(h) == h);
    // Appending an integer combination of generators changes nothing.
    std::vector<std::int64_t> combo(d, 0);
    for (const auto& r : rows) {
      const auto c = mult(rng);
      for (std::size_t k = 0; k < d; ++k) combo[k] += c * r[k];
    }
    Rows more = rows;
    more.push_back(combo);
    CHECK(hnf(to_int(more)) == h);
  }
}

TEST_CASE("index is multiplicative along chains and consistent with membership") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(0, 23);
  std::uniform_int_distribution<int> dims(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = static_cast<std::size_t>(dims(rng));
    auto random_point = [&] {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < d; ++i) c.emplace_back(num(rng), 12);
      return ExponentVector(std::move(c));
    };
    const ScaledLattice l0 = ScaledLattice::integer_lattice(d, Integer(12));
    const ScaledLattice l1 = l0.extended(random_point());
    const ScaledLattice l2 = l1.extended(random_point());
    CHECK(lattice_index(l2, l0) == lattice_index(l1, l0) * lattice_index(l2, l1));
    for (std::size_t r = 0; r < d; ++r) {
      CHECK(l1.contains(l0.basis_vector(r)));
      CHECK(l2.contains(l1.basis_vector(r)));
    }
  }
}
