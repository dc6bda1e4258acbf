// qolct: log canonical thresholds of irreducible quasi-ordinary
// hypersurfaces from their characteristic exponents.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qolct/cli.hpp"
#include "qolct/error.hpp"

namespace {

struct Flags {
  std::string input;
  std::string output;
  qolct::RunOptions run;
  std::size_t d = 0;
  std::size_t g = 0;
};

std::optional<std::string> read_input(const std::string& path, bool use_stdin) {
  if (path.empty() && !use_stdin) return std::nullopt;
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qolct::Error(qolct::ErrorCode::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_error(qolct::ErrorCode code, const std::string& message) {
  nlohmann::json doc{{"error", {{"code", std::string(qolct::error_code_name(code))}, {"message", message}}}};
  std::cerr << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log canonical thresholds of irreducible quasi-ordinary singularities"};
  app.require_subcommand(1);
  Flags flags;

  struct Sub {
    const char* name;
    const char* help;
    bool corpus;
  };
  const Sub subs[] = {
      {"validate", "Check exponents and print n, e, ell and the alpha table", false},
      {"lct", "Compute the log canonical threshold report", false},
      {"poles", "List the candidate poles of the motivic zeta function", false},
      {"normalize", "Reorder variables into descending lexicographic column order", false},
      {"invert", "Apply the inversion for lambda_1 = (1/n_1, 0, ..., 0)", false},
      {"verify", "Run the property suite on one instance or on a generated corpus", true},
      {"generate", "Generate random valid instances", true},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--input", flags.input, "Instance document (default: stdin)");
    sub->add_option("--output", flags.output, "Output file (default: stdout)");
    if (s.corpus) {
      sub->add_option("--count", flags.run.count, "Number of generated instances")->check(CLI::PositiveNumber);
      sub->add_option("--seed", flags.run.seed, "Generator seed");
      sub->add_option("--d", flags.d, "Dimension (default: drawn from 1..4)")->check(CLI::PositiveNumber);
      sub->add_option("--g", flags.g, "Number of exponents (default: drawn from 1..4)")->check(CLI::PositiveNumber);
      sub->add_option("--max-den", flags.run.max_denominator, "Largest increment denominator")
          ->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : qolct::kExitErrorBase + static_cast<int>(qolct::ErrorCode::UsageError);
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto command = *qolct::command_from_name(chosen->get_name());
  if (flags.d) flags.run.d = flags.d;
  if (flags.g) flags.run.g = flags.g;

  qolct::RunResult result;
  try {
    // verify reads stdin only when --input is given; generate never does.
    const bool stdin_default = command != qolct::Command::Verify && command != qolct::Command::Generate;
    std::optional<std::string> input = read_input(flags.input, stdin_default);
    result = qolct::run(command, flags.run, input ? std::optional<std::string_view>(*input) : std::nullopt);
  } catch (const qolct::Error& err) {
    print_error(err.code(), err.what());
    return qolct::kExitErrorBase + static_cast<int>(err.code());
  }

  if (!result.error_output.empty()) std::cerr << result.error_output;
  if (!result.output.empty()) {
    if (flags.output.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(flags.output, std::ios::binary);
      if (!out) {
        print_error(qolct::ErrorCode::IoError, "cannot write " + flags.output);
        return qolct::kExitErrorBase + static_cast<int>(qolct::ErrorCode::IoError);
      }
      out << result.output;
    }
  }
  return result.exit_code;
}
