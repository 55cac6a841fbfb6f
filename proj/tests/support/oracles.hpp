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

// Test-only oracles. Nothing here calls into the code path it checks:
// words are rebuilt by direct recursion, continuants by the explicit
// recursive definition, series by brute-force long division.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cfrac/poly.hpp"
#include "cfrac/rat.hpp"

namespace cfrac::testing {

/// W_n built from the recursion with fresh buffers at every level.
std::vector<std::uint8_t> word_by_recursion(std::size_t n);

/// l_n from the recurrence with 64-bit integers.
std::uint64_t length_by_recurrence(std::size_t n);

/// Value of [0; a_1, ..., a_k] as num/den, folding from the innermost
/// quotient outwards.
struct Fraction {
  Poly num;
  Poly den;
};
Fraction fold_continued_fraction(const std::vector<Poly>& quotients);

/// First n coefficients of num/den in T^{-1} by school long division of
/// num * T^n by den.
std::vector<Rat> series_by_long_division(const Poly& num, const Poly& den, std::size_t n);

/// Small random polynomials with coefficients p/q, |p| <= 9, 1 <= q <= 4.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}
  Rat rat();
  Rat nonzero_rat();
  Poly poly(std::size_t max_degree);
  Poly poly_of_degree(std::size_t degree);
  std::size_t uniform(std::size_t lo, std::size_t hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cfrac::testing
