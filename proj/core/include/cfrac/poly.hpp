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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfrac/rat.hpp"

namespace cfrac {

/// Polynomial degree with a distinguished minus-infinity for the zero
/// polynomial. Adding minus-infinity to anything yields minus-infinity.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree(); }
  constexpr explicit Degree(std::size_t value) : value_(value), finite_(true) {}

  constexpr bool is_finite() const { return finite_; }
  /// Throws std::domain_error on minus-infinity.
  std::size_t value() const;

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) {
    return (a.finite_ && b.finite_) ? Degree(a.value_ + b.value_) : Degree();
  }
  friend std::ostream& operator<<(std::ostream& os, Degree d);

 private:
  constexpr Degree() = default;
  std::size_t value_ = 0;
  bool finite_ = false;
};

/// Dense univariate polynomial over the rationals in the variable T.
/// coefficient(i) is the coefficient of T^i; the top stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coefficients);
  Poly(std::initializer_list<Rat> coefficients);
  Poly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rat& c, std::size_t k);
  /// The variable T.
  static Poly t();

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Degree degree() const;
  /// Degree as an integer; throws std::domain_error for the zero polynomial.
  std::size_t deg() const { return degree().value(); }

  /// Coefficient of T^i, zero beyond the degree.
  const Rat& coefficient(std::size_t i) const;
  std::span<const Rat> coefficients() const { return coeffs_; }
  std::size_t nonzero_terms() const;

  /// Throws std::domain_error for the zero polynomial.
  const Rat& leading_coeff() const;
  Poly monic() const;

  Rat operator()(const Rat& t) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator-(Poly p);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly p, const Rat& s) { return p *= s; }
  friend Poly operator*(const Rat& s, Poly p) { return p *= s; }

  friend bool operator==(const Poly& a, const Poly& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// num = quotient * den + remainder with deg remainder < deg den.
/// Throws std::domain_error if den is zero.
DivRem divrem(const Poly& num, const Poly& den);

/// Monic gcd; gcd(p, 0) = monic(p). Throws std::domain_error if both are zero.
Poly gcd(const Poly& p, const Poly& q);

Rat eval(const Poly& p, const Rat& t);
inline const Rat& leading_coeff(const Poly& p) { return p.leading_coeff(); }
inline Degree degree(const Poly& p) { return p.degree(); }
inline Poly monic(const Poly& p) { return p.monic(); }

/// Canonical text: "<num>/<den>*T^<k>" terms, highest degree first, joined
/// by " + " or " - ". The zero polynomial prints as "0".
std::string to_string(const Poly& p);

/// Parses the canonical text. Also accepts terms without a denominator,
/// "T" for "T^1", bare constants, and "*T^k" with an implicit coefficient 1.
Poly parse_poly(std::string_view text);

}  // namespace cfrac
