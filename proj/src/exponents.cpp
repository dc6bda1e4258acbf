#include "qolct/exponents.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qolct/error.hpp"

namespace qolct {

CharExponents::CharExponents(std::size_t d_, std::vector<ExponentVector> lambdas_)
    : d(d_), lambdas(std::move(lambdas_)) {
  if (d == 0) throw Error(ErrorCode::InvalidDimension, "dimension d must be >= 1");
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    if (lambdas[j].dimension() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "lambda_" + std::to_string(j + 1) + " has " +
                      std::to_string(lambdas[j].dimension()) + " coordinates, expected " +
                      std::to_string(d));
    }
  }
}

namespace {

Integer common_denominator(const CharExponents& ce) {
  Integer m = 1;
  for (const auto& v : ce.lambdas) {
    for (const auto& x : v.coords()) {
      Integer den = x.denominator();
      mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), den.get_mpz_t());
    }
  }
  return m;
}

std::vector<Rational> column(const CharExponents& ce, std::size_t i) {
  std::vector<Rational> col;
  col.reserve(ce.g());
  for (const auto& v : ce.lambdas) col.push_back(v[i]);
  return col;
}

}  // namespace

DerivedInvariants validate(const CharExponents& ce) {
  const std::size_t d = ce.d;
  const std::size_t g = ce.g();

  for (std::size_t j = 2; j <= g; ++j) {
    if (!componentwise_leq(ce.lambda(j - 1), ce.lambda(j))) {
      throw Error(ErrorCode::NotWeaklyIncreasing,
                  "lambda_" + std::to_string(j - 1) + " <= lambda_" + std::to_string(j) +
                      " fails componentwise (j = " + std::to_string(j) + ")");
    }
  }

  DerivedInvariants inv{ce, common_denominator(ce), {}, {}, {}, {}};

  ScaledLattice lattice = ScaledLattice::integer_lattice(d, inv.scale);
  for (std::size_t j = 1; j <= g; ++j) {
    if (lattice.contains(ce.lambda(j))) {
      throw Error(ErrorCode::InLattice,
                  "lambda_" + std::to_string(j) + " lies in M_" + std::to_string(j - 1) +
                      " (j = " + std::to_string(j) + ")");
    }
    ScaledLattice next = lattice.extended(ce.lambda(j));
    inv.n.push_back(lattice_index(next, lattice));
    lattice = std::move(next);
  }

  inv.e.assign(g + 1, Integer(1));
  inv.e[0] = std::accumulate(inv.n.begin(), inv.n.end(), Integer(1),
                             [](const Integer& a, const Integer& b) { return Integer(a * b); });
  for (std::size_t j = 1; j <= g; ++j) inv.e[j] = inv.e[j - 1] / inv.n_at(j);

  inv.ell.assign(g + 1, 0);
  for (std::size_t j = 1; j <= g; ++j) inv.ell[j] = ce.lambda(j).support_size();

  std::vector<Integer> p_product(d, Integer(1));
  for (std::size_t j = 1; j <= g; ++j) {
    std::vector<CoprimePair> row;
    row.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rational previous = j == 1 ? Rational(0) : ce.lambda(j - 1)[i];
      Rational a = Rational(p_product[i]) * (ce.lambda(j)[i] - previous);
      CoprimePair pair{a.denominator(), a.numerator()};
      if (!mpz_divisible_p(inv.n_at(j).get_mpz_t(), pair.p.get_mpz_t())) {
        throw Error(ErrorCode::InternalInconsistency,
                    "p_" + std::to_string(i + 1) + "^(" + std::to_string(j) + ") = " +
                        pair.p.get_str() + " does not divide n_" + std::to_string(j));
      }
      p_product[i] *= pair.p;
      row.push_back(std::move(pair));
    }
    inv.alpha.push_back(std::move(row));
  }
  return inv;
}

NormalizedExponents lex_normalize(const CharExponents& ce) {
  std::vector<std::vector<Rational>> columns;
  columns.reserve(ce.d);
  for (std::size_t i = 0; i < ce.d; ++i) columns.push_back(column(ce, i));

  std::vector<std::size_t> perm(ce.d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return lex_compare(columns[a], columns[b]) > 0;
  });

  std::vector<ExponentVector> lambdas;
  lambdas.reserve(ce.g());
  for (const auto& v : ce.lambdas) {
    std::vector<Rational> coords;
    coords.reserve(ce.d);
    for (std::size_t k = 0; k < ce.d; ++k) coords.push_back(v[perm[k]]);
    lambdas.emplace_back(std::move(coords));
  }
  return {CharExponents(ce.d, std::move(lambdas)), std::move(perm)};
}

bool is_lex_ordered(const CharExponents& ce) {
  for (std::size_t i = 1; i < ce.d; ++i) {
    if (lex_compare(column(ce, i - 1), column(ce, i)) < 0) return false;
  }
  return true;
}

bool is_normalized(const CharExponents& ce) {
  if (!is_lex_ordered(ce)) return false;
  if (ce.smooth()) return true;
  const ExponentVector& first = ce.lambda(1);
  bool excluded_form = first.support_size() == 1 && !first[0].is_zero() && first[0] < Rational(1);
  return !excluded_form;
}

bool has_inversion_form(const DerivedInvariants& inv) {
  if (inv.g() == 0) return false;
  const ExponentVector& first = inv.exponents.lambda(1);
  if (first[0] != Rational(Integer(1), inv.n_at(1))) return false;
  return first.support_size() == 1;
}

CharExponents invert(const CharExponents& ce) {
  DerivedInvariants inv = validate(ce);
  if (!has_inversion_form(inv)) {
    throw Error(ErrorCode::PreconditionFailed, "inversion requires lambda_1 = (1/n_1, 0, ..., 0)");
  }
  const Rational n1(inv.n_at(1));
  std::vector<ExponentVector> inverted;
  for (std::size_t j = 2; j <= ce.g(); ++j) {
    const ExponentVector& src = ce.lambda(j);
    std::vector<Rational> coords(src.coords().begin(), src.coords().end());
    coords[0] = n1 * (Rational(1) + src[0] - Rational(1) / n1);
    inverted.emplace_back(std::move(coords));
  }
  CharExponents result = lex_normalize(CharExponents(ce.d, std::move(inverted))).exponents;
  validate(result);
  return result;
}

}  // namespace qolct
