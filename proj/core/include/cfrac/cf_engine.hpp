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
#include <optional>
#include <span>
#include <vector>

#include "cfrac/laurent.hpp"
#include "cfrac/poly.hpp"
#include "cfrac/rat.hpp"

namespace cfrac {

/// Continued fraction [0; a_1, ..., a_k] of a rational function or of a
/// truncated series, with its continuants
///   K_n = a_n K_{n-1} + K_{n-2},  (x_1, x_0) = (1, 0),  (y_1, y_0) = (a_1, 1),
/// leading coefficients lambda_n = lc(a_n) and products mu_n = lc(y_n).
/// Partial quotients are 1-based; continuants and mu are stored from index 0.
class CFExpansion {
 public:
  std::size_t size() const { return quotients_.size(); }
  std::span<const Poly> partial_quotients() const { return quotients_; }

  const Poly& a(std::size_t n) const;
  const Poly& x(std::size_t n) const;
  const Poly& y(std::size_t n) const;
  const Rat& lambda(std::size_t n) const;
  const Rat& mu(std::size_t n) const;

  /// Number of leading partial quotients that are guaranteed to agree with
  /// the untruncated series.
  std::size_t certified() const { return certified_; }
  bool is_certified(std::size_t n) const { return n >= 1 && n <= certified_; }
  /// Precision N of the input, or nullopt for an exact rational input.
  std::optional<std::size_t> source_precision() const { return precision_; }
  /// Euclid reached a zero remainder: the input is exactly [0; a_1..a_k].
  bool terminated() const { return terminated_; }

  /// The first k quotients with their continuants.
  CFExpansion prefix(std::size_t k) const;

 private:
  friend CFExpansion expand(const Poly&, const Poly&, std::optional<std::size_t>, std::size_t);
  friend CFExpansion certify_by_doubling(const SourcePtr&, std::size_t, std::size_t, std::size_t);

  std::vector<Poly> quotients_;
  std::vector<Poly> x_{Poly()};
  std::vector<Poly> y_{Poly(1)};
  std::vector<Rat> mu_{Rat(1)};
  std::size_t certified_ = 0;
  std::optional<std::size_t> precision_;
  bool terminated_ = false;
};

/// Largest k with 2 deg y_k <= N (see README for why not the weaker
/// deg y_{k-1} + deg y_k <= N - 1).
std::size_t certified_length(const CFExpansion& e, std::size_t precision);

/// Runs polynomial Euclid on den / num, emitting partial quotients until
/// max_terms or a zero remainder. Requires den != 0 and deg num < deg den.
/// precision is the truncation order N the pair encodes (num / T^N for a
/// truncated series); nullopt means the input is exact and every computed
/// quotient is certified.
CFExpansion expand(const Poly& num, const Poly& den, std::optional<std::size_t> precision,
                   std::size_t max_terms);
CFExpansion expand(const TruncatedSeries& series, std::size_t max_terms);

/// <q_1, ..., q_k>: <> = 1, <q> = q, then K_k = q_k K_{k-1} + K_{k-2}.
Poly continuant(std::span<const Poly> qs);

/// x_n y_m - x_m y_n for 1 <= m < n <= e.size().
Poly delta(const CFExpansion& e, std::size_t m, std::size_t n);

struct Convergent {
  Poly x;
  Poly y;
  Poly x_star;  // monic(x)
  Poly y_star;  // monic(y)
};

/// Requires 1 <= n <= e.certified().
Convergent convergent(const CFExpansion& e, std::size_t n);

struct DoublingOptions {
  std::size_t initial_precision = 64;
  std::size_t precision_cap = std::size_t{1} << 20;
};

/// Doubles the precision from N0 until target_terms quotients are
/// certified, then re-expands at twice that precision and checks the prefix
/// is unchanged. For sources not known to be irrational, an expansion whose
/// certified convergent already matches every known coefficient at two
/// successive precisions is returned as terminated.
CFExpansion certify_by_doubling(const SourcePtr& source, std::size_t target_terms,
                                std::size_t initial_precision,
                                std::size_t precision_cap = DoublingOptions{}.precision_cap);

struct MeasurePoint {
  std::size_t n;
  Rat nu;  // 2 + deg a_{n+1} / deg y_n
};

/// Degree-based irrationality-measure estimates for n < certified. The
/// running maximum over n is the measure estimate.
std::vector<MeasurePoint> measure_estimate(const CFExpansion& e);

}  // namespace cfrac
