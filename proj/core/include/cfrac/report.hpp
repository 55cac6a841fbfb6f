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

#include <span>
#include <string>
#include <vector>

#include "cfrac/cf_engine.hpp"
#include "cfrac/theorem_forms.hpp"

// Text, JSON and CSV renderings shared by the CLI and the golden tests.
// Nothing here embeds timestamps or other run-dependent data.
namespace cfrac::report {

// [{"n": i, "a": "<poly>", "deg": d, "lambda": "p/q", "mu": "p/q", "certified": bool}, ...]
std::string expansion_json(const CFExpansion& e);
// Header "n,deg,lambda,certified" then one row per quotient.
std::string expansion_csv(const CFExpansion& e);
std::string expansion_plain(const CFExpansion& e);

// "OK (E_n) n=3" or "FAIL (15) n=2: residual=<poly>"
std::string check_line(const CheckResult& r);
std::string checks_plain(std::span<const CheckResult> results);
// [{"check": "(15)", "n": 2, "ok": true, "residual": "0"}, ...]
std::string checks_json(std::span<const CheckResult> results);
std::string checks_csv(std::span<const CheckResult> results);

std::string quadruple_plain(const TheoremQuadruple& q);
std::string quadruple_json(const TheoremQuadruple& q);
std::string quadruple_csv(const TheoremQuadruple& q);

std::string measure_plain(std::span<const MeasurePoint> points);
std::string measure_json(std::span<const MeasurePoint> points);
std::string measure_csv(std::span<const MeasurePoint> points);

/// Running maximum of the estimates; requires a non-empty span.
Rat measure_max(std::span<const MeasurePoint> points);

}  // namespace cfrac::report
