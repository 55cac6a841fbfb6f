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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace cfrac::cli {

enum class Command { Word, Series, Expand, ClosedForm, Identities, Verify, Measure };
enum class Format { Plain, Json, Csv };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecision = 3;
inline constexpr int kExitVerification = 4;

struct RunConfig {
  Command command = Command::Word;
  // Letter count, term count, n or n-max depending on the command.
  std::size_t count = 1;
  std::size_t initial_precision = 64;
  std::size_t precision_cap = std::size_t{1} << 20;
  Format format = Format::Plain;
  std::optional<std::string> out_path;
  // expand only: a series JSON file expanded at its own precision.
  std::optional<std::string> input_path;
};

struct UsageError {
  std::string message;
  int exit_code = kExitUsage;  // kExitOk for --help
};

/// Parses argv; never exits the process.
std::variant<RunConfig, UsageError> parse_args(int argc, const char* const* argv);

/// Throws std::invalid_argument when the config breaks its invariants.
void validate(const RunConfig& config);

/// Runs one command, writing the report to `out` (or config.out_path) and
/// diagnostics to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cfrac::cli
