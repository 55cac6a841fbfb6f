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

#include "cfrac/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cfrac/errors.hpp"

namespace cfrac {
namespace {

const Rat& zero_rat() {
  static const Rat zero;
  return zero;
}

}  // namespace

std::size_t Degree::value() const {
  if (!finite_) throw std::domain_error("degree of the zero polynomial");
  return value_;
}

std::ostream& operator<<(std::ostream& os, Degree d) {
  if (!d.is_finite()) return os << "-inf";
  return os << d.value();
}

Poly::Poly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coefficients) : coeffs_(coefficients) { trim(); }

Poly::Poly(const Rat& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rat& c, std::size_t k) {
  Poly p;
  if (c.is_zero()) return p;
  p.coeffs_.resize(k + 1);
  p.coeffs_[k] = c;
  return p;
}

Poly Poly::t() { return monomial(Rat(1), 1); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Poly::degree() const {
  return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
}

const Rat& Poly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rat();
}

std::size_t Poly::nonzero_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return !c.is_zero(); }));
}

const Rat& Poly::leading_coeff() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  const Rat inv = leading_coeff().inverse();
  Poly p = *this;
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

Rat Poly::operator()(const Rat& t) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rat& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly operator-(Poly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

// School-book product. The outer loop runs over the operand with fewer
// nonzero terms, which makes products with binomials such as T^k - 1 linear.
Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const bool swap = a.nonzero_terms() > b.nonzero_terms();
  const auto& outer = swap ? b.coeffs_ : a.coeffs_;
  const auto& inner = swap ? a.coeffs_ : b.coeffs_;

  std::vector<mpq_class> acc(outer.size() + inner.size() - 1);
  mpq_class term;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (outer[i].is_zero()) continue;
    const mpq_srcptr oi = outer[i].value().get_mpq_t();
    for (std::size_t j = 0; j < inner.size(); ++j) {
      if (inner[j].is_zero()) continue;
      mpq_mul(term.get_mpq_t(), oi, inner[j].value().get_mpq_t());
      mpq_add(acc[i + j].get_mpq_t(), acc[i + j].get_mpq_t(), term.get_mpq_t());
    }
  }
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& c : acc) out.emplace_back(std::move(c));
  return Poly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

DivRem divrem(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
  if (num.degree() < den.degree()) return {Poly(), num};

  const std::size_t dn = num.deg();
  const std::size_t dd = den.deg();
  const auto dc = den.coefficients();
  const mpq_class inv = 1 / dc[dd].value();

  std::vector<mpq_class> rem(dn + 1);
  for (std::size_t i = 0; i <= dn; ++i) rem[i] = num.coefficient(i).value();
  std::vector<Rat> quot(dn - dd + 1);

  std::vector<std::size_t> den_support;
  for (std::size_t j = 0; j < dd; ++j) {
    if (!dc[j].is_zero()) den_support.push_back(j);
  }

  mpq_class c;
  mpq_class term;
  for (std::size_t k = dn + 1; k-- > dd;) {
    if (sgn(rem[k]) == 0) continue;
    mpq_mul(c.get_mpq_t(), rem[k].get_mpq_t(), inv.get_mpq_t());
    const std::size_t shift = k - dd;
    for (std::size_t j : den_support) {
      mpq_mul(term.get_mpq_t(), c.get_mpq_t(), dc[j].value().get_mpq_t());
      mpq_sub(rem[shift + j].get_mpq_t(), rem[shift + j].get_mpq_t(), term.get_mpq_t());
    }
    rem[k] = 0;
    quot[shift] = Rat(c);
  }

  std::vector<Rat> r;
  r.reserve(dd);
  for (std::size_t i = 0; i < dd; ++i) r.emplace_back(std::move(rem[i]));
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Poly a = p.is_zero() ? q.monic() : p.monic();
  Poly b = p.is_zero() ? Poly() : (q.is_zero() ? Poly() : q.monic());
  while (!b.is_zero()) {
    Poly r = divrem(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.monic();
  }
  return a;
}

Rat eval(const Poly& p, const Rat& t) { return p(t); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto cs = p.coefficients();
  bool first = true;
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rat& c = cs[k];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    out += c.abs().to_fraction_string();
    out += "*T^";
    out += std::to_string(k);
  }
  return out;
}

namespace {

std::size_t parse_exponent(std::string_view s, std::string_view whole) {
  std::size_t k = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, k);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("invalid exponent in polynomial: '" + std::string(whole) + "'");
  }
  return k;
}

// A single unsigned term: "c", "c*T", "c*T^k", "T", "T^k".
void parse_term(std::string_view term, bool negative, std::vector<Rat>& acc, std::string_view whole) {
  if (term.empty()) throw ParseError("empty term in polynomial: '" + std::string(whole) + "'");
  Rat c(1);
  std::size_t k = 0;
  const auto tpos = term.find('T');
  if (tpos == std::string_view::npos) {
    c = Rat::parse(term);
  } else {
    std::string_view coef = term.substr(0, tpos);
    if (!coef.empty()) {
      if (coef.back() != '*') throw ParseError("expected '*' before T in '" + std::string(whole) + "'");
      coef.remove_suffix(1);
      c = Rat::parse(coef);
    }
    std::string_view rest = term.substr(tpos + 1);
    if (rest.empty()) {
      k = 1;
    } else {
      if (rest.front() != '^') throw ParseError("expected '^' after T in '" + std::string(whole) + "'");
      k = parse_exponent(rest.substr(1), whole);
    }
  }
  if (negative) c = -c;
  if (acc.size() <= k) acc.resize(k + 1);
  acc[k] += c;
}

}  // namespace

Poly parse_poly(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial text");

  std::vector<Rat> acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in polynomial: '" + std::string(text) + "'");
    }
    const auto next = s.find_first_of("+-", pos);
    const std::size_t end = next == std::string::npos ? s.size() : next;
    parse_term(std::string_view(s).substr(pos, end - pos), negative, acc, text);
    pos = end;
  }
  return Poly(std::move(acc));
}

}  // namespace cfrac
