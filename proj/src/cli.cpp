#include "qolct/cli.hpp"

#include <string>
#include <vector>

#include "qolct/error.hpp"

namespace qolct {

using nlohmann::json;

namespace {

Error field_error(ErrorCode code, const std::string& field, const std::string& what) {
  return Error(code, field + ": " + what);
}

json strings(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

json strings(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

json optional_rational(const std::optional<Rational>& r) {
  return r ? json(r->to_string()) : json(nullptr);
}

}  // namespace

CharExponents parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    throw Error(ErrorCode::ParseError, "byte " + std::to_string(err.byte) + ": " + err.what());
  }
  if (!doc.is_object()) throw field_error(ErrorCode::ParseError, "$", "expected an object");
  if (!doc.contains("d") || !doc["d"].is_number_integer()) {
    throw field_error(ErrorCode::InvalidDimension, "d", "missing or not an integer");
  }
  const auto d_value = doc["d"].get<std::int64_t>();
  if (d_value < 1) throw field_error(ErrorCode::InvalidDimension, "d", "must be >= 1");
  const auto d = static_cast<std::size_t>(d_value);

  if (!doc.contains("exponents") || !doc["exponents"].is_array()) {
    throw field_error(ErrorCode::ParseError, "exponents", "missing or not an array");
  }
  std::vector<ExponentVector> lambdas;
  const json& rows = doc["exponents"];
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const std::string row_field = "exponents[" + std::to_string(j) + "]";
    if (!rows[j].is_array()) throw field_error(ErrorCode::ParseError, row_field, "not an array");
    if (rows[j].size() != d) {
      throw field_error(ErrorCode::RaggedRows, row_field,
                        "has " + std::to_string(rows[j].size()) + " entries, expected d = " + std::to_string(d));
    }
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < d; ++i) {
      const std::string field = row_field + "[" + std::to_string(i) + "]";
      const json& cell = rows[j][i];
      if (!cell.is_string()) throw field_error(ErrorCode::MalformedRational, field, "rationals must be strings");
      Rational value;
      try {
        value = Rational::parse(cell.get<std::string>());
      } catch (const Error& err) {
        throw field_error(err.code(), field, err.what());
      }
      if (value.sign() < 0) {
        throw field_error(ErrorCode::NegativeCoordinate, field, "negative exponent " + value.to_string());
      }
      coords.push_back(std::move(value));
    }
    lambdas.emplace_back(std::move(coords));
  }
  return CharExponents(d, std::move(lambdas));
}

json instance_to_json(const CharExponents& ce) {
  json rows = json::array();
  for (const auto& v : ce.lambdas) {
    rows.push_back(strings(std::vector<Rational>(v.coords().begin(), v.coords().end())));
  }
  return json{{"d", ce.d}, {"exponents", rows}};
}

json invariants_to_json(const DerivedInvariants& inv) {
  json alpha = json::array();
  for (const auto& row : inv.alpha) {
    json cells = json::array();
    for (const auto& pair : row) cells.push_back({{"p", pair.p.get_str()}, {"q", pair.q.get_str()}});
    alpha.push_back(std::move(cells));
  }
  return json{{"n", strings(inv.n)}, {"e", strings(inv.e)}, {"ell", inv.ell}, {"alpha", alpha}};
}

json lct_report_to_json(const CharExponents& input, const Analysis& analysis) {
  const LctReport& report = analysis.report;
  json permutation = json::array();
  for (auto k : report.permutation) permutation.push_back(k + 1);

  json table = json::array();
  json candidates = json::array();
  if (analysis.table) {
    for (const auto& row : analysis.table->pairs) {
      json cells = json::array();
      for (const auto& pair : row) {
        cells.push_back({{"b", pair.log_discrepancy.get_str()}, {"B", pair.multiplicity.get_str()}});
      }
      table.push_back(std::move(cells));
    }
    candidates = strings(analysis.table->candidate_set);
  }

  json a_values = {{"A1", nullptr}, {"A2", nullptr}, {"A3", nullptr}};
  if (report.a_values) {
    a_values["A1"] = report.a_values->a1.to_string();
    a_values["A2"] = optional_rational(report.a_values->a2);
    a_values["A3"] = optional_rational(report.a_values->a3);
  }

  json warnings = json::array();
  if (!is_lex_ordered(input)) warnings.push_back("input was not lex-ordered; permutation applied");
  if (input.smooth()) warnings.push_back("smooth instance");
  if (!is_normalized(analysis.normalized.exponents) && !input.smooth()) {
    warnings.push_back("exponents are not normalized (lambda_1 = (a, 0, ..., 0) with a < 1)");
  }

  const DerivedInvariants& inv = analysis.invariants;
  return json{
      {"input", instance_to_json(input)},
      {"normalized_input", instance_to_json(analysis.normalized.exponents)},
      {"permutation", permutation},
      {"invariants", {{"n", strings(inv.n)}, {"e", strings(inv.e)}, {"ell", inv.ell}}},
      {"alpha", invariants_to_json(inv)["alpha"]},
      {"bB_table", table},
      {"candidate_set", candidates},
      {"A", a_values},
      {"lct", report.lct.to_string()},
      {"case_tag", std::string(case_name(report.case_tag))},
      {"log_canonical", report.log_canonical},
      {"pole_candidates", strings(report.pole_candidates)},
      {"warnings", warnings},
  };
}

json verification_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"hypothesis_met", c.hypothesis_met},
                      {"passed", c.passed},
                      {"witness", c.witness ? json(*c.witness) : json(nullptr)}});
  }
  return json{{"instance_id", report.instance_id}, {"checks", checks}, {"ok", report.ok()}};
}

json corpus_to_json(const CorpusConfig& cfg, const CorpusSummary& summary) {
  json tallies = json::object();
  for (const auto& [name, t] : summary.tallies) {
    tallies[name] = {{"applicable", t.applicable}, {"vacuous", t.vacuous}, {"passed", t.passed}, {"failed", t.failed}};
  }
  json failures = json::array();
  for (const auto& f : summary.failures) {
    failures.push_back({{"instance_id", f.instance_id}, {"check", f.check}, {"witness", f.witness}});
  }
  json config = {{"count", cfg.count},
                 {"seed", cfg.seed},
                 {"d", cfg.d ? json(*cfg.d) : json("1..4")},
                 {"g", cfg.g ? json(*cfg.g) : json("1..4")},
                 {"max_den", cfg.max_denominator}};
  return json{{"config", config},          {"instances", summary.instances},
              {"checks", tallies},         {"failure_count", summary.failure_count},
              {"failures", failures},      {"ok", summary.ok()}};
}

std::optional<Command> command_from_name(std::string_view name) {
  if (name == "validate") return Command::Validate;
  if (name == "lct") return Command::Lct;
  if (name == "poles") return Command::Poles;
  if (name == "normalize") return Command::Normalize;
  if (name == "invert") return Command::Invert;
  if (name == "verify") return Command::Verify;
  if (name == "generate") return Command::Generate;
  return std::nullopt;
}

namespace {

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

CharExponents require_input(std::optional<std::string_view> input) {
  if (!input) throw Error(ErrorCode::UsageError, "this command needs an instance document");
  return parse_instance(*input);
}

CorpusConfig corpus_config(const RunOptions& options) {
  CorpusConfig cfg;
  cfg.count = options.count;
  cfg.seed = options.seed;
  cfg.d = options.d;
  cfg.g = options.g;
  cfg.max_denominator = options.max_denominator;
  return cfg;
}

RunResult dispatch(Command command, const RunOptions& options, std::optional<std::string_view> input) {
  RunResult result;
  switch (command) {
    case Command::Validate: {
      CharExponents ce = require_input(input);
      DerivedInvariants inv = validate(ce);
      json doc = invariants_to_json(inv);
      doc["input"] = instance_to_json(ce);
      doc["lex_ordered"] = is_lex_ordered(ce);
      doc["normalized"] = is_normalized(ce);
      doc["valid"] = true;
      result.output = render(doc);
      break;
    }
    case Command::Lct: {
      CharExponents ce = require_input(input);
      result.output = render(lct_report_to_json(ce, analyze(ce)));
      break;
    }
    case Command::Poles: {
      result.output = render(strings(analyze(require_input(input)).report.pole_candidates));
      break;
    }
    case Command::Normalize: {
      CharExponents ce = require_input(input);
      validate(ce);
      NormalizedExponents normalized = lex_normalize(ce);
      json doc = instance_to_json(normalized.exponents);
      json permutation = json::array();
      for (auto k : normalized.permutation) permutation.push_back(k + 1);
      doc["permutation"] = permutation;
      result.output = render(doc);
      break;
    }
    case Command::Invert: {
      result.output = render(instance_to_json(invert(require_input(input))));
      break;
    }
    case Command::Verify: {
      if (input) {
        VerificationReport report = verify_instance(parse_instance(*input), "input");
        result.output = render(verification_to_json(report));
        if (!report.ok()) result.exit_code = kExitVerificationFailed;
      } else {
        CorpusConfig cfg = corpus_config(options);
        CorpusSummary summary = verify_corpus(cfg);
        result.output = render(corpus_to_json(cfg, summary));
        if (!summary.ok()) result.exit_code = kExitVerificationFailed;
      }
      break;
    }
    case Command::Generate: {
      CorpusConfig cfg = corpus_config(options);
      if (options.count == 1) {
        result.output = render(instance_to_json(generate_random(corpus_instance_config(cfg, 0))));
      } else {
        json docs = json::array();
        for (std::size_t idx = 0; idx < options.count; ++idx) {
          docs.push_back(instance_to_json(generate_random(corpus_instance_config(cfg, idx))));
        }
        result.output = render(docs);
      }
      break;
    }
  }
  return result;
}

}  // namespace

RunResult run(Command command, const RunOptions& options, std::optional<std::string_view> input) {
  try {
    return dispatch(command, options, input);
  } catch (const Error& err) {
    RunResult result;
    result.exit_code = kExitErrorBase + static_cast<int>(err.code());
    result.error_output =
        render(json{{"error", {{"code", std::string(error_code_name(err.code())) }, {"message", err.what()}}}});
    return result;
  }
}

}  // namespace qolct
