#include <doctest.h>

#include <algorithm>
#include <vector>

#include "qolct/error.hpp"
#include "qolct/lct.hpp"
#include "qolct/verify.hpp"

using namespace qolct;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

CharExponents make(std::size_t d, std::vector<std::vector<Rational>> rows) {
  std::vector<ExponentVector> lambdas;
  for (auto& r : rows) lambdas.emplace_back(std::move(r));
  return CharExponents(d, std::move(lambdas));
}

DerivedInvariants example1() { return validate(make(2, {{q(1, 3), q(1, 3)}, {q(7, 6), q(2, 3)}})); }
DerivedInvariants example2() {
  return validate(make(3, {{q(1, 2), q(1, 2), q(0)}, {q(2, 3), q(2, 3), q(11, 3)}}));
}
DerivedInvariants curve(long n, long d) { return validate(make(1, {{q(n, d)}})); }

DivisorPair pair(long b, long big) { return DivisorPair{Integer(b), Integer(big)}; }

}  // namespace

TEST_CASE("table of the first worked example") {
  PoleTable t = pole_table(example1());
  CHECK(t.at(1, 1) == pair(4, 6));
  CHECK(t.at(2, 1) == pair(13, 22));
  CHECK(t.at(1, 2) == pair(4, 6));
  CHECK(t.at(2, 2) == pair(5, 8));
  CHECK(t.candidate_set == std::vector<Rational>{q(13, 22), q(5, 8), q(2, 3), q(1)});
}

TEST_CASE("table of the second worked example") {
  PoleTable t = pole_table(example2());
  CHECK(t.candidate_set == std::vector<Rational>{q(14, 33), q(10, 21), q(1, 2), q(1)});
  // Coordinate 3 is outside the support of lambda_1.
  CHECK(t.at(1, 3) == pair(1, 0));
  CHECK_FALSE(t.at(1, 3).contributes());
  CHECK(t.at(2, 3) == pair(14, 33));
}

TEST_CASE("zero multiplicity exactly outside the support") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorConfig cfg;
    cfg.d = 3;
    cfg.g = 3;
    cfg.seed = seed;
    DerivedInvariants inv = validate(generate_random(cfg));
    PoleTable t = pole_table(inv);
    for (std::size_t j = 1; j <= inv.g(); ++j) {
      for (std::size_t i = 1; i <= inv.d(); ++i) {
        const bool outside = i > inv.ell[j];
        CHECK(!t.at(j, i).contributes() == outside);
        if (outside) CHECK(t.at(j, i).log_discrepancy == 1);
      }
    }
  }
}

TEST_CASE("A-values") {
  AValues a = a_values(example1());
  CHECK(a.a1 == q(2, 3));
  CHECK(a.a2 == q(13, 22));
  CHECK_FALSE(a.a3.has_value());

  AValues b = a_values(example2());
  CHECK(b.a2 == q(10, 21));
  CHECK(b.a3 == q(14, 33));

  AValues c = a_values(curve(3, 2));
  CHECK(c.a1 == q(5, 6));
  CHECK_FALSE(c.a2.has_value());
  CHECK_FALSE(c.a3.has_value());
}

TEST_CASE("closed-form threshold") {
  LctReport r1 = lct_closed_form(example1());
  CHECK(r1.lct == q(13, 22));
  CHECK(r1.case_tag == ThresholdCase::Case3);
  CHECK_FALSE(r1.log_canonical);

  LctReport r2 = lct_closed_form(example2());
  CHECK(r2.lct == q(14, 33));
  CHECK(r2.case_tag == ThresholdCase::Case2);

  LctReport r3 = lct_closed_form(curve(3, 2));
  CHECK(r3.lct == q(5, 6));
  CHECK(r3.case_tag == ThresholdCase::Case1);
  CHECK(lct_min(pole_table(curve(3, 2))) == q(5, 6));

  LctReport smooth = lct_closed_form(validate(CharExponents(2, {})));
  CHECK(smooth.lct == q(1));
  CHECK(smooth.case_tag == ThresholdCase::Smooth);
  CHECK(smooth.pole_candidates.empty());
  CHECK(smooth.log_canonical);
}

TEST_CASE("unsorted input is refused by the closed form") {
  DerivedInvariants inv = validate(make(2, {{q(0), q(1, 2)}}));
  try {
    lct_closed_form(inv);
    FAIL("unsorted input accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotLexOrdered);
  }
  // The pipeline normalizes first.
  Analysis a = analyze(make(2, {{q(0), q(1, 2)}}));
  CHECK(a.report.permutation == std::vector<std::size_t>{1, 0});
  CHECK(a.report.lct == q(1));
}

TEST_CASE("minimum of the candidate set") {
  CHECK(lct_min(pole_table(example1())) == q(13, 22));
  CHECK(lct_min(pole_table(example2())) == q(14, 33));
  PoleTable only_one;
  only_one.candidate_set = {q(1)};
  CHECK(lct_min(only_one) == q(1));
  CHECK_THROWS_AS(lct_min(PoleTable{}), Error);
}

TEST_CASE("log canonicity") {
  CHECK(is_log_canonical(validate(make(2, {{q(1), q(1, 2)}}))));
  CHECK(is_log_canonical(validate(make(3, {{q(1, 3), q(1, 3), q(0)}}))));
  CHECK_FALSE(is_log_canonical(example1()));
  CHECK_FALSE(is_log_canonical(curve(3, 2)));
  CHECK(is_log_canonical(validate(CharExponents(1, {}))));
  CHECK(lct_closed_form(validate(make(3, {{q(1, 3), q(1, 3), q(0)}}))).lct == q(1));
}

TEST_CASE("candidate poles") {
  CHECK(pole_candidates(pole_table(example1())) == std::vector<Rational>{q(-1), q(-2, 3), q(-5, 8), q(-13, 22)});
  CHECK(pole_candidates(pole_table(example2())) == std::vector<Rational>{q(-1), q(-1, 2), q(-10, 21), q(-14, 33)});
  CHECK(analyze(CharExponents(2, {})).report.pole_candidates.empty());
}

TEST_CASE("closed form agrees with the candidate minimum on generated instances") {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    GeneratorConfig cfg;
    cfg.d = 1 + seed % 4;
    cfg.g = 1 + (seed / 4) % 4;
    cfg.seed = seed * 7919;
    DerivedInvariants inv = validate(generate_random(cfg));
    PoleTable t = pole_table(inv);
    LctReport r = lct_closed_form(inv);
    CAPTURE(seed);
    CHECK(r.lct == lct_min(t));
    CHECK(r.pole_candidates.back() == -r.lct);
    CHECK(r.lct <= q(1));
    CHECK(Rational(Integer(1), inv.e[0]) < r.lct);
    CHECK(r.log_canonical == (r.lct == q(1)));
    CHECK(is_log_canonical(inv) == r.log_canonical);
    for (std::size_t k = 1; k <= inv.g(); ++k) {
      for (std::size_t i = inv.ell[k - 1] + 1; i <= inv.ell[k]; ++i) {
        CHECK(Rational(Integer(1), inv.e[k - 1]) < t.at(k, i).quotient());
        CHECK(t.at(k, inv.ell[k - 1] + 1).quotient() <= t.at(k, i).quotient());
      }
    }
  }
}
