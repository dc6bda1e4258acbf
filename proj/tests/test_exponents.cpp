#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qolct/error.hpp"
#include "qolct/exponents.hpp"
#include "qolct/verify.hpp"

using namespace qolct;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

CharExponents make(std::size_t d, std::vector<std::vector<Rational>> rows) {
  std::vector<ExponentVector> lambdas;
  for (auto& r : rows) lambdas.emplace_back(std::move(r));
  return CharExponents(d, std::move(lambdas));
}

CharExponents example1() { return make(2, {{q(1, 3), q(1, 3)}, {q(7, 6), q(2, 3)}}); }
CharExponents example2() { return make(3, {{q(1, 2), q(1, 2), q(0)}, {q(2, 3), q(2, 3), q(11, 3)}}); }

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

ErrorCode code_of(const CharExponents& ce) {
  try {
    validate(ce);
  } catch (const Error& err) {
    return err.code();
  }
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("invariants of the first worked example") {
  DerivedInvariants inv = validate(example1());
  CHECK(inv.n == ints({3, 2}));
  CHECK(inv.e == ints({6, 2, 1}));
  CHECK(inv.ell == std::vector<std::size_t>{0, 2, 2});
  // alpha_1 = (1/3, 1/3); alpha_2 = 3 * (7/6 - 1/3, 2/3 - 1/3) = (5/2, 1).
  CHECK(inv.alpha_at(1, 1) == CoprimePair{Integer(3), Integer(1)});
  CHECK(inv.alpha_at(1, 2) == CoprimePair{Integer(3), Integer(1)});
  CHECK(inv.alpha_at(2, 1) == CoprimePair{Integer(2), Integer(5)});
  CHECK(inv.alpha_at(2, 2) == CoprimePair{Integer(1), Integer(1)});
}

TEST_CASE("invariants of the second worked example") {
  DerivedInvariants inv = validate(example2());
  CHECK(inv.n == ints({2, 3}));
  CHECK(inv.e == ints({6, 3, 1}));
  CHECK(inv.ell == std::vector<std::size_t>{0, 2, 3});
  CHECK(inv.alpha_at(1, 3) == CoprimePair{Integer(1), Integer(0)});
  CHECK(inv.alpha_at(2, 3) == CoprimePair{Integer(3), Integer(11)});
}

TEST_CASE("validation errors") {
  CHECK(code_of(make(2, {{q(1, 2), q(0)}, {q(1), q(0)}})) == ErrorCode::InLattice);
  CHECK(code_of(make(2, {{q(1), q(0)}})) == ErrorCode::InLattice);
  CHECK(code_of(make(2, {{q(1, 2), q(1, 2)}, {q(2, 3), q(1, 3)}})) == ErrorCode::NotWeaklyIncreasing);
  CHECK_THROWS_AS(make(2, {{q(1, 2)}}), Error);
  CHECK_THROWS_AS(CharExponents(0, {}), Error);
  try {
    validate(make(2, {{q(1, 2), q(0)}, {q(1), q(0)}}));
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("j = 2") != std::string::npos);
  }
}

TEST_CASE("smooth instance yields the trivial bundle") {
  DerivedInvariants inv = validate(CharExponents(3, {}));
  CHECK(inv.g() == 0);
  CHECK(inv.e == ints({1}));
  CHECK(inv.n.empty());
  CHECK(inv.alpha.empty());
}

TEST_CASE("lex normalization") {
  auto id = lex_normalize(example1());
  CHECK(id.permutation == std::vector<std::size_t>{0, 1});
  CHECK(id.exponents == example1());

  CharExponents rotated = make(3, {{q(0), q(1, 2), q(1, 2)}, {q(11, 3), q(2, 3), q(2, 3)}});
  auto n = lex_normalize(rotated);
  CHECK(n.permutation == std::vector<std::size_t>{1, 2, 0});
  CHECK(n.exponents == example2());
  CHECK_FALSE(is_lex_ordered(rotated));
  CHECK(is_lex_ordered(n.exponents));

  CharExponents tied = make(2, {{q(1, 2), q(1, 2)}});
  CHECK(lex_normalize(tied).permutation == std::vector<std::size_t>{0, 1});
}

TEST_CASE("normalized branches") {
  CHECK(is_normalized(example1()));
  CHECK_FALSE(is_normalized(make(2, {{q(1, 2), q(0)}, {q(3, 2), q(1, 2)}})));
  CHECK(is_normalized(make(1, {{q(3, 2)}})));
  CHECK_FALSE(is_normalized(make(2, {{q(0), q(1, 2)}})));  // not lex-ordered
}

TEST_CASE("inversion") {
  CHECK(invert(make(2, {{q(1, 2), q(0)}})).smooth());
  CHECK(invert(make(1, {{q(1, 2)}})).smooth());
  CHECK(invert(make(2, {{q(1, 2), q(0)}, {q(3, 2), q(1, 2)}})) == make(2, {{q(4), q(1, 2)}}));
  try {
    invert(example1());
    FAIL("inversion accepted lambda_1 with two nonzero coordinates");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PreconditionFailed);
  }
  CHECK_THROWS_AS(invert(make(1, {{q(2, 3)}})), Error);  // 2/3 != 1/n_1
}

TEST_CASE("structural invariants on generated instances") {
  std::mt19937_64 shuffle_rng(17);
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    GeneratorConfig cfg;
    cfg.d = 1 + seed % 4;
    cfg.g = 1 + (seed / 4) % 4;
    cfg.seed = seed;
    CharExponents ce = generate_random(cfg);
    CAPTURE(seed);
    DerivedInvariants inv = validate(ce);

    for (const auto& n : inv.n) CHECK(n >= 2);
    CHECK(inv.e.back() == 1);
    for (std::size_t j = 1; j <= inv.g(); ++j) {
      CHECK(inv.e[j - 1] == inv.n_at(j) * inv.e[j]);
      for (const auto& pair : inv.alpha[j - 1]) CHECK(mpz_divisible_p(inv.n_at(j).get_mpz_t(), pair.p.get_mpz_t()));
    }
    // Generated instances are lex-normalized: ell_1 > 0, bands nonincreasing.
    CHECK(inv.ell[1] > 0);
    for (std::size_t j = 1; j <= inv.g(); ++j) {
      CHECK(inv.ell[j - 1] <= inv.ell[j]);
      const auto& lam = ce.lambda(j);
      for (std::size_t i = inv.ell[j - 1] + 1; i < inv.ell[j]; ++i) CHECK(lam[i] <= lam[i - 1]);
    }

    // Shuffling coordinates and re-normalizing preserves the n_j multiset.
    std::vector<std::size_t> perm(ce.d);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), shuffle_rng);
    std::vector<ExponentVector> shuffled;
    for (const auto& lam : ce.lambdas) {
      std::vector<Rational> c;
      for (auto k : perm) c.push_back(lam[k]);
      shuffled.emplace_back(std::move(c));
    }
    CharExponents mixed(ce.d, std::move(shuffled));
    auto n_mixed = validate(mixed).n;
    auto n_norm = validate(lex_normalize(mixed).exponents).n;
    std::sort(n_mixed.begin(), n_mixed.end());
    std::sort(n_norm.begin(), n_norm.end());
    CHECK(n_mixed == n_norm);
    CHECK(lex_normalize(mixed).exponents == ce);
  }
}
