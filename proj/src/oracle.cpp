// Unrolled-sum evaluation of the (b, B) table. Deliberately shares no code
// with the recurrence in lct.cpp.

#include <algorithm>

#include "qolct/error.hpp"
#include "qolct/verify.hpp"

namespace qolct {

namespace {

// prod_{first <= l <= last} p_i^(l); empty products are 1.
Integer p_product(const DerivedInvariants& inv, std::size_t i, std::size_t first, std::size_t last) {
  Integer prod = 1;
  for (std::size_t l = first; l <= last; ++l) prod *= inv.alpha[l - 1][i - 1].p;
  return prod;
}

}  // namespace

PoleTable oracle_pole_table(const DerivedInvariants& inv) {
  if (inv.g() == 0) throw Error(ErrorCode::PreconditionFailed, "oracle table requires g >= 1");
  PoleTable table;
  std::vector<Rational> quotients{Rational(1)};
  for (std::size_t j = 1; j <= inv.g(); ++j) {
    std::vector<DivisorPair> row;
    for (std::size_t i = 1; i <= inv.d(); ++i) {
      Integer big = 0;
      Integer small = p_product(inv, i, 1, j);
      for (std::size_t k = 1; k <= j; ++k) {
        const Integer tail = p_product(inv, i, k + 1, j);
        const Integer& q = inv.alpha[k - 1][i - 1].q;
        big += inv.e[k - 1] * q * tail;
        small += q * tail;
      }
      if (i <= inv.ell[j]) quotients.emplace_back(small, big);
      row.push_back(DivisorPair{small, big});
    }
    table.pairs.push_back(std::move(row));
  }
  std::sort(quotients.begin(), quotients.end());
  quotients.erase(std::unique(quotients.begin(), quotients.end()), quotients.end());
  table.candidate_set = std::move(quotients);
  return table;
}

}  // namespace qolct
