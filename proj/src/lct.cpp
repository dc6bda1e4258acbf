#include "qolct/lct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qolct/error.hpp"

namespace qolct {

std::string_view case_name(ThresholdCase c) noexcept {
  switch (c) {
    case ThresholdCase::Smooth: return "Smooth";
    case ThresholdCase::Case1: return "Case1";
    case ThresholdCase::Case2: return "Case2";
    case ThresholdCase::Case3: return "Case3";
  }
  return "Unknown";
}

namespace {

void require_singular(const DerivedInvariants& inv, const char* what) {
  if (inv.g() == 0) {
    throw Error(ErrorCode::PreconditionFailed, std::string(what) + " requires g >= 1");
  }
}

void require_lex_ordered(const DerivedInvariants& inv) {
  if (!is_lex_ordered(inv.exponents)) {
    throw Error(ErrorCode::NotLexOrdered, "exponent columns are not in descending lexicographic order");
  }
}

// lambda_{1,1} == 1/n_1, tested on the reduced pair.
bool first_exponent_is_minimal(const DerivedInvariants& inv) {
  const CoprimePair& a = inv.alpha_at(1, 1);
  return a.p == inv.n_at(1) && a.q == 1;
}

}  // namespace

PoleTable pole_table(const DerivedInvariants& inv) {
  require_singular(inv, "pole table");
  PoleTable table;
  std::set<Rational> candidates{Rational(1)};
  for (std::size_t j = 1; j <= inv.g(); ++j) {
    std::vector<DivisorPair> row;
    row.reserve(inv.d());
    for (std::size_t i = 1; i <= inv.d(); ++i) {
      const CoprimePair& a = inv.alpha_at(j, i);
      DivisorPair pair;
      if (j == 1) {
        pair.log_discrepancy = a.p + a.q;
        pair.multiplicity = inv.e[0] * a.q;
      } else {
        const DivisorPair& prev = table.pairs.back()[i - 1];
        pair.log_discrepancy = a.p * prev.log_discrepancy + a.q;
        pair.multiplicity = a.p * prev.multiplicity + inv.e[j - 1] * a.q;
      }
      if (i <= inv.ell[j]) candidates.insert(pair.quotient());
      row.push_back(std::move(pair));
    }
    table.pairs.push_back(std::move(row));
  }
  table.candidate_set.assign(candidates.begin(), candidates.end());
  return table;
}

AValues a_values(const DerivedInvariants& inv) {
  require_singular(inv, "A-values");
  require_lex_ordered(inv);
  const CharExponents& ce = inv.exponents;
  const Rational one(1);
  const Rational e0(inv.e[0]);

  PoleTable table = pole_table(inv);
  auto cross_check = [](const Rational& formula, const DivisorPair& pair, const char* name) {
    if (!pair.contributes() || pair.quotient() != formula) {
      throw Error(ErrorCode::InternalInconsistency,
                  std::string(name) + " = " + formula.to_string() + " disagrees with its table quotient");
    }
  };

  const Rational l11 = ce.lambda(1)[0];
  AValues out{(one + l11) / (e0 * l11), std::nullopt, std::nullopt};
  cross_check(out.a1, table.at(1, 1), "A1");

  if (inv.g() > 1) {
    const Rational n1(inv.n_at(1));
    const Rational e1(inv.e[1]);
    const Rational l21 = ce.lambda(2)[0];
    out.a2 = n1 * (one + l21) / (e1 * (n1 * (one + l21) - one));
    // b_1^(2)/B_1^(2) equals A2 only when lambda_{1,1} = 1/n_1, which is
    // the only case where A2 enters the threshold.
    if (first_exponent_is_minimal(inv)) cross_check(*out.a2, table.at(2, 1), "A2");

    if (inv.ell[1] < inv.ell[2]) {
      const Rational l2k = ce.lambda(2)[inv.ell[1]];
      out.a3 = (one + l2k) / (e1 * l2k);
      cross_check(*out.a3, table.at(2, inv.ell[1] + 1), "A3");
    }
  }
  return out;
}

LctReport lct_closed_form(const DerivedInvariants& inv) {
  require_lex_ordered(inv);
  LctReport report;
  report.permutation.resize(inv.d());
  for (std::size_t i = 0; i < inv.d(); ++i) report.permutation[i] = i;
  if (inv.g() == 0) return report;

  AValues a = a_values(inv);
  if (!first_exponent_is_minimal(inv) || inv.g() == 1) {
    report.case_tag = ThresholdCase::Case1;
    report.lct = min(Rational(1), a.a1);
  } else if (inv.ell[1] < inv.ell[2]) {
    report.case_tag = ThresholdCase::Case2;
    report.lct = min(*a.a2, *a.a3);
  } else {
    report.case_tag = ThresholdCase::Case3;
    report.lct = *a.a2;
  }
  report.a_values = std::move(a);
  report.log_canonical = report.lct == Rational(1);
  report.pole_candidates = pole_candidates(pole_table(inv));
  return report;
}

Rational lct_min(const PoleTable& table) {
  if (table.candidate_set.empty()) {
    throw Error(ErrorCode::PreconditionFailed, "empty candidate set");
  }
  return *std::min_element(table.candidate_set.begin(), table.candidate_set.end());
}

bool is_log_canonical(const DerivedInvariants& inv) {
  bool predicate = true;
  if (inv.g() > 0) {
    const ExponentVector& first = inv.exponents.lambda(1);
    const Rational half(1, 2);
    const Rational minimal(Integer(1), inv.n_at(1));
    bool all_one_or_half = true;
    bool all_minimal = true;
    for (const auto& x : first.coords()) {
      if (x.is_zero()) continue;
      all_one_or_half = all_one_or_half && (x == Rational(1) || x == half);
      all_minimal = all_minimal && x == minimal;
    }
    predicate = inv.g() == 1 && (all_one_or_half || all_minimal);
  }
  bool threshold_is_one = lct_closed_form(inv).lct == Rational(1);
  if (predicate != threshold_is_one) {
    throw Error(ErrorCode::InternalInconsistency,
                "log-canonicity predicate disagrees with the computed threshold");
  }
  return predicate;
}

std::vector<Rational> pole_candidates(const PoleTable& table) {
  std::vector<Rational> poles;
  poles.reserve(table.candidate_set.size());
  for (const auto& c : table.candidate_set) poles.push_back(-c);
  std::sort(poles.begin(), poles.end());
  return poles;
}

Analysis analyze(const CharExponents& ce) {
  NormalizedExponents normalized = lex_normalize(ce);
  DerivedInvariants inv = validate(normalized.exponents);
  std::optional<PoleTable> table;
  if (inv.g() > 0) table = pole_table(inv);
  LctReport report = lct_closed_form(inv);
  report.permutation = normalized.permutation;
  return {std::move(normalized), std::move(inv), std::move(table), std::move(report)};
}

}  // namespace qolct
