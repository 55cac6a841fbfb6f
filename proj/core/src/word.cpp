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

#include "cfrac/word.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cfrac {

mpz_class LengthSeq::length(std::size_t n) const {
  std::lock_guard lock(mu_);
  while (memo_.size() <= n) {
    const std::size_t m = memo_.size();
    memo_.push_back(2 * memo_[m - 1] + memo_[m - 2] + 2);
  }
  return memo_[n];
}

mpz_class LengthSeq::big_l(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("L_n is defined for n >= 1");
  return 2 * length(n) - length(n - 1) + 1;
}

std::size_t LengthSeq::length_u(std::size_t n) const {
  const mpz_class l = length(n);
  if (!l.fits_ulong_p() || l.get_ui() > std::numeric_limits<std::size_t>::max()) {
    throw std::overflow_error("l_" + std::to_string(n) + " does not fit a machine integer");
  }
  return static_cast<std::size_t>(l.get_ui());
}

const LengthSeq& lengths() {
  static const LengthSeq table;
  return table;
}

WordStream::WordStream() : buffer_{1}, level_lengths_{0, 1} {}

void WordStream::ensure(std::size_t k) const {
  while (buffer_.size() < k) {
    const std::size_t prev = level_lengths_[level_ - 1];
    const std::size_t cur = buffer_.size();
    // W_{n+1} = W_n 2 W_{n-1} 2 W_n, with W_{n-1} = W_n[0, prev).
    buffer_.resize(2 * cur + prev + 2);
    auto it = buffer_.begin();
    it[static_cast<std::ptrdiff_t>(cur)] = 2;
    std::copy_n(it, prev, it + static_cast<std::ptrdiff_t>(cur + 1));
    it[static_cast<std::ptrdiff_t>(cur + 1 + prev)] = 2;
    std::copy_n(it, cur, it + static_cast<std::ptrdiff_t>(cur + prev + 2));
    level_lengths_.push_back(buffer_.size());
    ++level_;
  }
}

std::vector<std::uint8_t> WordStream::prefix(std::size_t k) const {
  std::lock_guard lock(mu_);
  ensure(k);
  return {buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::uint8_t WordStream::letter(std::size_t i) const {
  if (i == 0) throw std::out_of_range("word letters are 1-based");
  std::lock_guard lock(mu_);
  ensure(i);
  return buffer_[i - 1];
}

const WordStream& word() {
  static const WordStream w;
  return w;
}

std::string word_string(std::size_t k) {
  std::string s;
  s.reserve(k);
  for (auto c : word_prefix(k)) s.push_back(static_cast<char>('0' + c));
  return s;
}

namespace {

class ThetaSource final : public CoefficientSource {
 public:
  Rat coefficient(std::size_t i) const override {
    if (i == 0) throw std::out_of_range("series coefficients start at index 1");
    return Rat(static_cast<long>(word().letter(i)));
  }
  std::vector<Rat> prefix(std::size_t n) const override {
    std::vector<Rat> out;
    out.reserve(n);
    for (auto c : word_prefix(n)) out.emplace_back(static_cast<long>(c));
    return out;
  }
  bool known_irrational() const override { return true; }
  std::string name() const override { return "theta"; }
};

}  // namespace

SourcePtr theta_source() {
  static const SourcePtr src = std::make_shared<ThetaSource>();
  return src;
}

}  // namespace cfrac
