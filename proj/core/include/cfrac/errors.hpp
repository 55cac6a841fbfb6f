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

#include <stdexcept>
#include <string>

namespace cfrac {

// Malformed text for a rational, polynomial or series.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition on indices or depths was not met (e.g. asking for a
// convergent past the certified prefix).
class InsufficientDepth : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Doubling reached the configured precision cap before certifying the
// requested number of partial quotients.
class PrecisionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two precisions disagreed on a prefix that both reported as certified.
class CertificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cfrac
