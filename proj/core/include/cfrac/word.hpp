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
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cfrac/laurent.hpp"

namespace cfrac {

/// Lengths l_n of the finite words W_n:
///   l_0 = 0, l_1 = 1, l_{n+1} = 2 l_n + l_{n-1} + 2.
/// Memoized; safe for concurrent use.
class LengthSeq {
 public:
  mpz_class length(std::size_t n) const;
  /// L_n = 2 l_n - l_{n-1} + 1 for n >= 1.
  mpz_class big_l(std::size_t n) const;

  /// l_n as a machine integer; throws std::overflow_error if it does not fit.
  std::size_t length_u(std::size_t n) const;

 private:
  mutable std::mutex mu_;
  mutable std::vector<mpz_class> memo_{0, 1};
};

/// Shared process-wide table.
const LengthSeq& lengths();

inline mpz_class length_l(std::size_t n) { return lengths().length(n); }
inline mpz_class big_l(std::size_t n) { return lengths().big_l(n); }

/// The infinite word W over {1, 2}: the projective limit of
///   W_0 = (), W_1 = 1, W_n = W_{n-1} 2 W_{n-2} 2 W_{n-1}.
/// Letters are produced by growing one W_n buffer; W_{n-1} is its prefix of
/// length l_{n-1}, so no other buffer is kept.
class WordStream {
 public:
  WordStream();

  std::vector<std::uint8_t> prefix(std::size_t k) const;
  std::uint8_t letter(std::size_t i) const;  // 1-based

 private:
  void ensure(std::size_t k) const;

  mutable std::mutex mu_;
  mutable std::vector<std::uint8_t> buffer_;  // W_level_
  mutable std::vector<std::size_t> level_lengths_;
  mutable std::size_t level_ = 1;
};

const WordStream& word();

inline std::vector<std::uint8_t> word_prefix(std::size_t k) { return word().prefix(k); }

/// Digit string such as "122121212212".
std::string word_string(std::size_t k);

/// Source with c_i = w_i, the coefficients of theta = sum w_i T^{-i}.
SourcePtr theta_source();

}  // namespace cfrac
