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

#include "cfrac/rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "cfrac/errors.hpp"

namespace cfrac {
namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_.get_num() = num;
  v_.get_den() = den;
  v_.canonicalize();
}

Rat::Rat(mpq_class value) : v_(std::move(value)) {
  if (v_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const std::string_view s = strip(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s, true)) throw ParseError("invalid rational: '" + std::string(text) + "'");
    return Rat(to_mpz(s), mpz_class(1));
  }
  const auto num = strip(s.substr(0, slash));
  const auto den = strip(s.substr(slash + 1));
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  }
  const mpz_class d = to_mpz(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rat(to_mpz(num), d);
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  Rat r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }

Rat Rat::pow(unsigned exponent) const {
  Rat r;
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), exponent);
  return r;
}

std::string Rat::to_string() const { return v_.get_str(); }

std::string Rat::to_fraction_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& rhs) {
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), rhs.v_.get_mpq_t());
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), rhs.v_.get_mpq_t());
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), rhs.v_.get_mpq_t());
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rat: division by zero");
  mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), rhs.v_.get_mpq_t());
  return *this;
}

Rat operator-(const Rat& a) {
  Rat r;
  mpq_neg(r.v_.get_mpq_t(), a.v_.get_mpq_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace cfrac
