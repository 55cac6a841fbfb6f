// Copyright 2026 The cfrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cfrac/cf_engine.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/laurent.hpp"
#include "cfrac/report.hpp"
#include "cfrac/theorem_forms.hpp"
#include "cfrac/word.hpp"

namespace cfrac::cli {
namespace {

std::string word_report(std::size_t k, Format format) {
  const std::string w = word_string(k);
  switch (format) {
    case Format::Json:
      return "{\"k\": " + std::to_string(k) + ", \"word\": \"" + w + "\"}\n";
    case Format::Csv: {
      std::string out = "i,letter\n";
      for (std::size_t i = 0; i < w.size(); ++i) out += std::to_string(i + 1) + "," + w[i] + "\n";
      return out;
    }
    case Format::Plain:
      break;
  }
  return w + "\n";
}

std::string series_report(std::size_t n, Format format) {
  const auto s = TruncatedSeries::from_source(theta_source(), n);
  if (format == Format::Csv) {
    std::string out = "i,c\n";
    for (std::size_t i = 1; i <= n; ++i) out += std::to_string(i) + "," + s.coefficient(i).to_string() + "\n";
    return out;
  }
  return s.to_json() + "\n";
}

std::string render(const CFExpansion& e, Format format) {
  switch (format) {
    case Format::Json: return report::expansion_json(e);
    case Format::Csv: return report::expansion_csv(e);
    case Format::Plain: break;
  }
  return report::expansion_plain(e);
}

std::string render(std::span<const CheckResult> checks, Format format) {
  switch (format) {
    case Format::Json: return report::checks_json(checks);
    case Format::Csv: return report::checks_csv(checks);
    case Format::Plain: break;
  }
  return report::checks_plain(checks);
}

bool all_ok(std::span<const CheckResult> checks) {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CFExpansion theta_expansion(const RunConfig& c, std::size_t terms) {
  return certify_by_doubling(theta_source(), terms, c.initial_precision, c.precision_cap);
}

// Returns the report and whether every check passed.
std::pair<std::string, bool> execute(const RunConfig& c) {
  const ClosedForms& forms = closed_forms();
  switch (c.command) {
    case Command::Word:
      return {word_report(c.count, c.format), true};
    case Command::Series:
      return {series_report(c.count, c.format), true};
    case Command::Expand: {
      if (c.input_path) {
        const auto series = TruncatedSeries::from_json(read_file(*c.input_path));
        return {render(expand(series, c.count), c.format), true};
      }
      return {render(theta_expansion(c, c.count), c.format), true};
    }
    case Command::ClosedForm: {
      const auto q = forms.quadruple(c.count);
      switch (c.format) {
        case Format::Json: return {report::quadruple_json(q), true};
        case Format::Csv: return {report::quadruple_csv(q), true};
        case Format::Plain: break;
      }
      return {report::quadruple_plain(q), true};
    }
    case Command::Identities: {
      const CFExpansion e = theta_expansion(c, 4 * c.count + 4);
      const auto checks = identity_suite(forms, c.count, &e);
      return {render(checks, c.format), all_ok(checks)};
    }
    case Command::Verify: {
      const CFExpansion e = theta_expansion(c, 4 * c.count + 4);
      const auto checks = verify_suite(forms, e, c.count);
      return {render(checks, c.format), all_ok(checks)};
    }
    case Command::Measure: {
      const auto points = measure_estimate(theta_expansion(c, c.count));
      switch (c.format) {
        case Format::Json: return {report::measure_json(points), true};
        case Format::Csv: return {report::measure_csv(points), true};
        case Format::Plain: break;
      }
      return {report::measure_plain(points), true};
    }
  }
  throw std::logic_error("unknown command");
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.initial_precision < 1) throw std::invalid_argument("--precision must be >= 1");
  if (c.precision_cap < c.initial_precision) throw std::invalid_argument("--precision-cap must be >= --precision");
  if (c.count < 1 && c.command != Command::Word) throw std::invalid_argument("term counts must be >= 1");
  if (c.command == Command::Measure && c.count < 2) throw std::invalid_argument("measure needs --terms >= 2");
  if (c.input_path && c.command != Command::Expand) throw std::invalid_argument("--input applies to expand only");
}

std::variant<RunConfig, UsageError> parse_args(int argc, const char* const* argv) {
  RunConfig c;
  CLI::App app{"Continued fractions of Laurent series over Q and the closed form for theta"};
  app.name("cfrac");
  app.require_subcommand(1);

  std::string format = "plain";
  std::string out;
  app.add_option("--precision", c.initial_precision, "Initial series precision N0")->check(CLI::PositiveNumber);
  app.add_option("--precision-cap", c.precision_cap, "Largest precision tried while doubling")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", out, "Write the report to FILE");

  auto* word_cmd = app.add_subcommand("word", "Print the first k letters of W")->fallthrough();
  word_cmd->add_option("k", c.count, "Number of letters")->required();

  auto* series_cmd = app.add_subcommand("series", "Print theta truncated to k coefficients")->fallthrough();
  series_cmd->add_option("--terms", c.count, "Number of coefficients")->required()->check(CLI::PositiveNumber);

  std::string input;
  auto* expand_cmd = app.add_subcommand("expand", "Certified partial quotients of theta")->fallthrough();
  expand_cmd->add_option("--terms", c.count, "Number of partial quotients")->required()->check(CLI::PositiveNumber);
  expand_cmd->add_option("--input", input, "Expand a series JSON file at its own precision instead");

  auto* closed_cmd = app.add_subcommand("closed-form", "Predicted quotients a_{4n+1}..a_{4n+4}")->fallthrough();
  closed_cmd->add_option("--n", c.count, "Quadruple index n >= 1")->required()->check(CLI::PositiveNumber);

  auto* ident_cmd = app.add_subcommand("identities", "Run the identity suite for n <= n-max")->fallthrough();
  ident_cmd->add_option("--n-max", c.count, "Largest n")->required()->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Compare the expansion with (E_0) and (E_n)")->fallthrough();
  verify_cmd->add_option("--n-max", c.count, "Largest n")->required()->check(CLI::PositiveNumber);

  auto* measure_cmd = app.add_subcommand("measure", "Irrationality-measure estimates")->fallthrough();
  measure_cmd->add_option("--terms", c.count, "Number of certified quotients")->required()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return UsageError{app.help(), kExitOk};
  } catch (const CLI::ParseError& e) {
    return UsageError{e.what() + std::string("\n") + app.help(), kExitUsage};
  }

  if (*word_cmd) c.command = Command::Word;
  else if (*series_cmd) c.command = Command::Series;
  else if (*expand_cmd) c.command = Command::Expand;
  else if (*closed_cmd) c.command = Command::ClosedForm;
  else if (*ident_cmd) c.command = Command::Identities;
  else if (*verify_cmd) c.command = Command::Verify;
  else if (*measure_cmd) c.command = Command::Measure;

  c.format = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Plain);
  if (!out.empty()) c.out_path = out;
  if (!input.empty()) c.input_path = input;
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    return UsageError{e.what(), kExitUsage};
  }
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::pair<std::string, bool> result;
  try {
    result = execute(config);
  } catch (const PrecisionCapExceeded& e) {
    err << "precision cap exceeded: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *config.out_path << '\n';
      return kExitError;
    }
    file << result.first;
  } else {
    out << result.first;
  }
  if (!result.second) {
    err << "verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace cfrac::cli
