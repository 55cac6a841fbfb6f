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

#include <iostream>
#include <variant>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  auto parsed = cfrac::cli::parse_args(argc, argv);
  if (auto* usage = std::get_if<cfrac::cli::UsageError>(&parsed)) {
    (usage->exit_code == cfrac::cli::kExitOk ? std::cout : std::cerr) << usage->message << '\n';
    return usage->exit_code;
  }
  return cfrac::cli::run(std::get<cfrac::cli::RunConfig>(parsed), std::cout, std::cerr);
}
