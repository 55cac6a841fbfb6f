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
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "cfrac/poly.hpp"
#include "cfrac/rat.hpp"

namespace cfrac {

/// Supplies the coefficient c_i of T^{-i} for i >= 1. Implementations must
/// be deterministic and safe to query from several threads.
class CoefficientSource {
 public:
  virtual ~CoefficientSource() = default;
  virtual Rat coefficient(std::size_t i) const = 0;

  /// Fills c_1..c_n. The default calls coefficient() n times.
  virtual std::vector<Rat> prefix(std::size_t n) const;

  /// True when the series is known not to be a rational function; doubling
  /// then never reports a terminated expansion.
  virtual bool known_irrational() const { return false; }
  virtual std::string name() const { return "series"; }
};

using SourcePtr = std::shared_ptr<const CoefficientSource>;

/// Wraps a callable i -> c_i.
SourcePtr function_source(std::function<Rat(std::size_t)> fn, std::string name = "function",
                          bool known_irrational = false);

/// Coefficients of the expansion of num/den in T^{-1}; requires
/// deg num < deg den.
SourcePtr rational_function_source(Poly num, Poly den);

/// c_1..c_n of num/den with deg num < deg den, by the linear recurrence
/// that den imposes on the coefficients.
std::vector<Rat> laurent_coefficients(const Poly& num, const Poly& den, std::size_t n);

struct RationalFunction {
  Poly num;
  Poly den;
};

/// First N coefficients of a Laurent series in T^{-1} with no polynomial
/// part, optionally tied to the source that produced them.
class TruncatedSeries {
 public:
  /// Series without a source; extend() will throw.
  TruncatedSeries(std::vector<Rat> coefficients);

  static TruncatedSeries from_source(SourcePtr source, std::size_t precision);

  std::size_t precision() const { return coeffs_.size(); }
  std::span<const Rat> coefficients() const { return coeffs_; }
  const Rat& coefficient(std::size_t i) const;  // 1-based
  const SourcePtr& source() const { return source_; }

  /// Requires a source and new_precision > precision().
  TruncatedSeries extend(std::size_t new_precision) const;
  /// Keeps the first n coefficients; n must be in [1, precision()].
  TruncatedSeries truncate(std::size_t n) const;

  /// sum c_i T^{-i} = num / T^N.
  RationalFunction to_rational() const;

  /// {"N": n, "coeffs": ["p/q", ...]}
  std::string to_json() const;
  static TruncatedSeries from_json(const std::string& text);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  TruncatedSeries(std::vector<Rat> coefficients, SourcePtr source);
  std::vector<Rat> coeffs_;
  SourcePtr source_;
};

}  // namespace cfrac
