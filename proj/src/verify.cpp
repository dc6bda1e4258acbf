#include "qolct/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "qolct/error.hpp"

namespace qolct {

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

namespace {

const std::vector<std::string> kLemmaChecks = {
    "band_minimum",                // first coordinate of a band has the smallest quotient
    "above_previous_degree",       // 1/e_{k-1} < b_i^(k)/B_i^(k)
    "below_degree_when_large",     // b/B <= 1/e_k when alpha > 1/n_k
    "next_level_window",           // 1/e_k < b^(k+1)/B^(k+1) < 1/e_{k+1} when alpha = 1/n_k
    "next_level_band_minimum",     // band minimum at level k+1 when the band leader has alpha = 1/n_k
    "vertical_order_equivalence",  // quotient order between levels k, k+1 vs. q e_k b <= q B
    "vertical_monotone",           // level k is a column minimum when alpha > 1/n_k
    "vertical_monotone_minimal",   // level k+1 is a column minimum when alpha = 1/n_k
};

// Accumulates one named check over all index tuples in its hypothesis range.
class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void record(bool passed, const std::function<std::string()>& witness) {
    result_.hypothesis_met = true;
    if (!passed && result_.passed) {
      result_.passed = false;
      result_.witness = witness();
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string at(std::size_t k, std::size_t i) {
  return "k=" + std::to_string(k) + ",i=" + std::to_string(i);
}

Rational reciprocal(const Integer& x) { return Rational(Integer(1), x); }

Rational alpha_value(const DerivedInvariants& inv, std::size_t k, std::size_t i) {
  const CoprimePair& a = inv.alpha_at(k, i);
  return Rational(a.q, a.p);
}

// b/B <= b'/B' with b/0 read as +infinity (b >= 1 always).
bool quotient_leq(const DivisorPair& x, const DivisorPair& y) {
  return x.log_discrepancy * y.multiplicity <= y.log_discrepancy * x.multiplicity;
}

}  // namespace

VerificationReport check_lemma_inequalities(const DerivedInvariants& inv, const PoleTable& table) {
  std::vector<Tally> tallies;
  for (const auto& name : kLemmaChecks) tallies.emplace_back(name);
  Tally& band_min = tallies[0];
  Tally& above_prev = tallies[1];
  Tally& below_large = tallies[2];
  Tally& window = tallies[3];
  Tally& next_band_min = tallies[4];
  Tally& vert_equiv = tallies[5];
  Tally& vert_mono = tallies[6];
  Tally& vert_mono_min = tallies[7];

  const std::size_t g = inv.g();
  auto r = [&](std::size_t i, std::size_t k) { return table.at(k, i).quotient(); };

  for (std::size_t k = 1; k <= g; ++k) {
    const std::size_t first = inv.ell[k - 1] + 1;
    const std::size_t last = inv.ell[k];
    const Rational one_over_nk = reciprocal(inv.n_at(k));
    const bool leader_minimal = first <= last && alpha_value(inv, k, first) == one_over_nk;

    for (std::size_t i = first; i <= last; ++i) {
      const Rational a = alpha_value(inv, k, i);
      const Rational q = r(i, k);

      band_min.record(r(first, k) <= q, [&] {
        return at(k, i) + ": " + r(first, k).to_string() + " > " + q.to_string();
      });
      above_prev.record(reciprocal(inv.e[k - 1]) < q, [&] {
        return at(k, i) + ": 1/" + inv.e[k - 1].get_str() + " >= " + q.to_string();
      });
      if (a > one_over_nk) {
        below_large.record(q <= reciprocal(inv.e[k]), [&] {
          return at(k, i) + ": " + q.to_string() + " > 1/" + inv.e[k].get_str();
        });
        for (std::size_t j = k; j <= g; ++j) {
          vert_mono.record(q <= r(i, j), [&] {
            return at(k, i) + ",j=" + std::to_string(j) + ": " + q.to_string() + " > " + r(i, j).to_string();
          });
        }
      }
      if (k < g && a == one_over_nk) {
        const Rational next = r(i, k + 1);
        window.record(reciprocal(inv.e[k]) < next && next < reciprocal(inv.e[k + 1]), [&] {
          return at(k, i) + ": " + next.to_string() + " outside (1/" + inv.e[k].get_str() + ", 1/" +
                 inv.e[k + 1].get_str() + ")";
        });
        for (std::size_t j = k; j <= g; ++j) {
          vert_mono_min.record(next <= r(i, j), [&] {
            return at(k, i) + ",j=" + std::to_string(j) + ": " + next.to_string() + " > " + r(i, j).to_string();
          });
        }
      }
      if (k < g && leader_minimal) {
        next_band_min.record(r(first, k + 1) <= r(i, k + 1), [&] {
          return at(k, i) + ": " + r(first, k + 1).to_string() + " > " + r(i, k + 1).to_string();
        });
      }
    }

    if (k < g) {
      for (std::size_t i = first; i <= inv.ell[g]; ++i) {
        const DivisorPair& cur = table.at(k, i);
        const DivisorPair& nxt = table.at(k + 1, i);
        const Integer& q_next = inv.alpha_at(k + 1, i).q;
        const bool lhs = quotient_leq(cur, nxt);
        const bool rhs = q_next * inv.e[k] * cur.log_discrepancy <= q_next * cur.multiplicity;
        vert_equiv.record(lhs == rhs, [&] {
          return at(k, i) + ": order " + (lhs ? "holds" : "fails") + " but criterion " +
                 (rhs ? "holds" : "fails");
        });
      }
    }
  }

  VerificationReport report;
  for (auto& t : tallies) report.checks.push_back(t.take());
  return report;
}

CheckResult check_inversion_invariance(const CharExponents& ce) {
  CheckResult result{"inversion_invariance", false, true, std::nullopt};
  CharExponents normalized = lex_normalize(ce).exponents;
  DerivedInvariants inv = validate(normalized);
  if (!has_inversion_form(inv)) return result;
  result.hypothesis_met = true;
  const Rational original = lct_closed_form(inv).lct;
  try {
    const Rational inverted = analyze(invert(normalized)).report.lct;
    if (original != inverted) {
      result.passed = false;
      result.witness = "lct " + original.to_string() + " vs inverted " + inverted.to_string();
    }
  } catch (const Error& err) {
    result.passed = false;
    result.witness = std::string("inverted instance rejected: ") + err.what();
  }
  return result;
}

namespace {

constexpr int kMaxRejections = 1000;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }

 private:
  std::mt19937_64 rng_;
};

ExponentVector random_step(Draw& draw, const ExponentVector& base, const GeneratorConfig& cfg) {
  std::vector<Rational> coords(base.coords().begin(), base.coords().end());
  for (auto& x : coords) {
    if (draw.chance(0.5)) continue;
    const std::uint64_t den = draw.uniform(1, cfg.max_denominator);
    const std::uint64_t num = draw.uniform(1, (cfg.max_integer_part + 1) * den - 1);
    x += Rational(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
  }
  return ExponentVector(std::move(coords));
}

ExponentVector forced_first(Draw& draw, const GeneratorConfig& cfg, bool band) {
  const std::uint64_t k = draw.uniform(2, cfg.max_denominator);
  const std::size_t width = band ? static_cast<std::size_t>(draw.uniform(1, cfg.d)) : 1;
  std::vector<Rational> coords(cfg.d, Rational(0));
  for (std::size_t i = 0; i < width; ++i) coords[i] = Rational(1, static_cast<long>(k));
  return ExponentVector(std::move(coords));
}

}  // namespace

CharExponents generate_random(const GeneratorConfig& cfg) {
  if (cfg.d == 0 || cfg.g == 0 || cfg.max_denominator == 0 || cfg.max_integer_part == 0) {
    throw Error(ErrorCode::PreconditionFailed, "generator bounds must all be >= 1");
  }
  Draw draw(cfg.seed);
  std::vector<ExponentVector> lambdas;
  ScaledLattice lattice = ScaledLattice::integer_lattice(cfg.d, Integer(1));

  const bool can_force = cfg.max_denominator >= 2;
  const bool force_inversion = can_force && draw.chance(cfg.inversion_form_fraction);
  const bool force_band = can_force && !force_inversion && draw.chance(cfg.uniform_band_fraction);

  for (std::size_t j = 1; j <= cfg.g; ++j) {
    const ExponentVector base = j == 1 ? ExponentVector::zero(cfg.d) : lambdas.back();
    std::optional<ExponentVector> accepted;
    if (j == 1 && (force_inversion || force_band)) {
      accepted = forced_first(draw, cfg, force_band);
    } else {
      for (int attempt = 0; attempt < kMaxRejections && !accepted; ++attempt) {
        ExponentVector candidate = random_step(draw, base, cfg);
        // The current lattice uses the scale of the accepted exponents; a
        // candidate needing a finer scale is automatically outside it.
        if (!lattice.contains(candidate)) accepted = std::move(candidate);
      }
    }
    if (!accepted) {
      throw Error(ErrorCode::GenerationExhausted,
                  "no admissible exponent found at level " + std::to_string(j) + " after " +
                      std::to_string(kMaxRejections) + " draws");
    }
    lambdas.push_back(*accepted);
    // Rebuild the chain at the common scale of everything accepted so far.
    Integer scale = 1;
    for (const auto& v : lambdas) {
      for (const auto& x : v.coords()) {
        Integer den = x.denominator();
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
      }
    }
    lattice = ScaledLattice::integer_lattice(cfg.d, scale);
    for (const auto& v : lambdas) lattice = lattice.extended(v);
  }

  CharExponents out = lex_normalize(CharExponents(cfg.d, std::move(lambdas))).exponents;
  validate(out);
  return out;
}

namespace {

std::string join(const std::vector<Integer>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i].get_str();
  return os.str();
}

void add(VerificationReport& report, std::string name, bool hypothesis, bool passed,
         std::optional<std::string> witness = std::nullopt) {
  report.checks.push_back(
      CheckResult{std::move(name), hypothesis, !hypothesis || passed, passed ? std::nullopt : std::move(witness)});
}

void structural_checks(const Analysis& a, VerificationReport& report) {
  const DerivedInvariants& inv = a.invariants;
  const std::size_t g = inv.g();
  const bool singular = g > 0;

  bool n_ok = std::all_of(inv.n.begin(), inv.n.end(), [](const Integer& n) { return n >= 2; });
  add(report, "n_at_least_two", singular, n_ok, "n = " + join(inv.n));

  bool e_ok = inv.e[g] == 1;
  for (std::size_t j = 1; j <= g; ++j) e_ok = e_ok && inv.e[j - 1] == inv.n_at(j) * inv.e[j];
  add(report, "degree_chain", true, e_ok, "e = " + join(inv.e));

  bool divides = true;
  for (std::size_t j = 1; j <= g; ++j) {
    for (const auto& pair : inv.alpha[j - 1]) {
      divides = divides && mpz_divisible_p(inv.n_at(j).get_mpz_t(), pair.p.get_mpz_t());
    }
  }
  add(report, "p_divides_n", singular, divides);

  bool ell_ok = inv.ell[0] == 0 && (g == 0 || inv.ell[1] > 0) && (g == 0 || inv.ell[g] <= inv.d());
  for (std::size_t j = 1; j <= g; ++j) ell_ok = ell_ok && inv.ell[j - 1] <= inv.ell[j];
  add(report, "support_chain", singular, ell_ok);

  // Within a band the exponent is nonincreasing; beyond ell_j it vanishes.
  bool band_ok = true;
  for (std::size_t j = 1; j <= g; ++j) {
    const ExponentVector& v = inv.exponents.lambda(j);
    for (std::size_t i = inv.ell[j - 1] + 1; i < inv.ell[j]; ++i) band_ok = band_ok && v[i] <= v[i - 1];
    for (std::size_t i = inv.ell[j]; i < inv.d(); ++i) band_ok = band_ok && v[i].is_zero();
  }
  add(report, "band_nonincreasing", singular, band_ok);

  const Rational& lct = a.report.lct;
  bool bounds = lct.sign() > 0 && lct <= Rational(1);
  if (singular) bounds = bounds && reciprocal(inv.e[0]) < lct;
  add(report, "threshold_bounds", true, bounds, "lct = " + lct.to_string());

  const auto& poles = a.report.pole_candidates;
  add(report, "largest_pole_is_minus_lct", singular, !poles.empty() && poles.back() == -lct,
      "lct = " + lct.to_string());
}

}  // namespace

VerificationReport verify_instance(const CharExponents& ce, std::string instance_id) {
  VerificationReport report;
  report.instance_id = std::move(instance_id);

  std::optional<Analysis> analysis;
  try {
    analysis = analyze(ce);
  } catch (const Error& err) {
    add(report, "validation", true, false, err.what());
    return report;
  }
  add(report, "validation", true, true);
  structural_checks(*analysis, report);

  const DerivedInvariants& inv = analysis->invariants;
  if (analysis->table) {
    const PoleTable& table = *analysis->table;
    add(report, "oracle_table_equality", true, oracle_pole_table(inv) == table);
    const Rational minimum = lct_min(table);
    add(report, "closed_form_equals_minimum", true, minimum == analysis->report.lct,
        "closed form " + analysis->report.lct.to_string() + " vs minimum " + minimum.to_string());

    bool identities = true;
    std::string why;
    try {
      AValues a = a_values(inv);
      identities = a.a1 == table.at(1, 1).quotient();
      if (a.a3) identities = identities && *a.a3 == table.at(2, inv.ell[1] + 1).quotient();
    } catch (const Error& err) {
      identities = false;
      why = err.what();
    }
    add(report, "table_identities", true, identities, why);

    VerificationReport lemmas = check_lemma_inequalities(inv, table);
    for (auto& c : lemmas.checks) report.checks.push_back(std::move(c));
  } else {
    for (const char* name : {"oracle_table_equality", "closed_form_equals_minimum", "table_identities"}) {
      add(report, name, false, true);
    }
    for (const auto& name : kLemmaChecks) add(report, name, false, true);
  }

  try {
    report.checks.push_back(check_inversion_invariance(analysis->normalized.exponents));
  } catch (const Error& err) {
    add(report, "inversion_invariance", true, false, err.what());
  }

  try {
    bool lc = is_log_canonical(inv);
    add(report, "log_canonical_consistency", true, lc == analysis->report.log_canonical);
  } catch (const Error& err) {
    add(report, "log_canonical_consistency", true, false, err.what());
  }
  return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::size_t kMaxRecordedFailures = 20;

}  // namespace

GeneratorConfig corpus_instance_config(const CorpusConfig& cfg, std::size_t idx) {
  const std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64(idx));
  GeneratorConfig gen;
  gen.d = cfg.d.value_or(1 + seed % 4);
  gen.g = cfg.g.value_or(1 + (seed >> 8) % 4);
  gen.max_denominator = cfg.max_denominator;
  gen.max_integer_part = cfg.max_integer_part;
  gen.seed = seed;
  gen.inversion_form_fraction = cfg.inversion_form_fraction;
  gen.uniform_band_fraction = cfg.uniform_band_fraction;
  return gen;
}

void CorpusSummary::merge(const VerificationReport& report) {
  ++instances;
  for (const auto& c : report.checks) {
    CheckTally& t = tallies[c.name];
    if (!c.hypothesis_met) {
      ++t.vacuous;
      continue;
    }
    ++t.applicable;
    if (c.passed) {
      ++t.passed;
    } else {
      ++t.failed;
      ++failure_count;
      if (failures.size() < kMaxRecordedFailures) {
        failures.push_back({report.instance_id, c.name, c.witness.value_or("")});
      }
    }
  }
}

CorpusSummary verify_corpus(const CorpusConfig& cfg) {
  CorpusSummary summary;
  for (std::size_t idx = 0; idx < cfg.count; ++idx) {
    const std::string id = "seed" + std::to_string(cfg.seed) + "-" + std::to_string(idx);
    try {
      summary.merge(verify_instance(generate_random(corpus_instance_config(cfg, idx)), id));
    } catch (const Error& err) {
      VerificationReport failed{id, {CheckResult{"generation", true, false, err.what()}}};
      summary.merge(failed);
    }
  }
  return summary;
}

}  // namespace qolct
