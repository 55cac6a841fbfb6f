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

#include <array>
#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfrac/cf_engine.hpp"
#include "cfrac/poly.hpp"
#include "cfrac/rat.hpp"
#include "cfrac/word.hpp"

namespace cfrac {

/// Predicted partial quotients (a_{4n+1}, a_{4n+2}, a_{4n+3}, a_{4n+4}) =
/// (lambda A_n, lambda (T-1), lambda B_n, lambda (T-1)).
struct TheoremQuadruple {
  std::size_t n = 0;
  std::array<Poly, 4> a;
  std::array<Rat, 4> lambdas;
};

/// Polynomial and rational identities that tie the closed forms to the
/// expansion of theta. EqK is reported as "(K)".
enum class Identity {
  Eq6,    // y*_{4n} = S_n
  Eq7,    // y*_{4n+2} = S'_n
  Eq8,    // R_n S'_n - R'_n S_n = S_{n+1} R'_n - R_{n+1} S'_n = (-1)^n (T-1)
  Eq9,    // x*_4 = R_1, x*_6 = R'_1
  Eq13,   // a_{4n+2}, a_{4n+4} as (-1)^{n+1} mu mu (T-1)
  Eq15,   // S_n + S_{n+1} = S'_n [(T-1) B_n + 1]
  Eq19,   // R_{n+1} S_n - R_n S_{n+1} = (-1)^{n+1} (T-1) [(T-1) B_n + 1]
  Eq25,   // a_{4n+3} = (-1)^{n+1} mu_{4n+2}^{-2} B_n
  Eq26,   // S'_n - S'_{n-1} = S_n [(T-1) A_n + 2], n >= 2
  Eq30,   // R'_n S'_{n-1} - S'_n R'_{n-1} = (-1)^n (T-1) [(T-1) A_n + 2], n >= 2
  Eq36,   // a_{4n+1} = (-1)^{n+1} mu_{4n}^{-2} A_n
  I,      // 1/mu_{4n+2} - 1/mu_{4n-2} = 2/mu_{4n}, n >= 2
  III,    // 1/mu_{4n+2} = 1/mu_{4n} + 1/mu_{4n+4}
  R,      // r_{n+1} = 2 r_n + r_{n-1}; with an expansion also r_n = -1/mu_{4n}, s_n = -1/mu_{4n+2}
  LLink,  // (25/4) r_n = L_n
};

/// Label used in reports, e.g. "(15)", "(III)", "(L-link)".
std::string label(Identity id);
/// Accepts "15", "(15)", "III", "L-link", ...
std::optional<Identity> parse_identity(std::string_view text);
const std::vector<Identity>& all_identities();

/// Smallest n at which the identity is stated.
std::size_t min_n(Identity id);
/// Expansion depth (certified quotients) the identity needs at n; 0 when it
/// is purely closed-form.
std::size_t required_depth(Identity id, std::size_t n);

struct CheckResult {
  std::string check;  // "(E_n)", "(15)", ...
  std::size_t n = 0;
  bool ok = false;
  Poly residual;  // zero when ok; constants for rational identities
};

/// Closed-form side: the sequences r_n, s_n, lambda_i, the polynomials
/// A_n, B_n, S_n, S'_n and the quadruples. Memoized and thread-safe.
class ClosedForms {
 public:
  explicit ClosedForms(const LengthSeq& lengths = cfrac::lengths()) : lengths_(&lengths) {}

  /// r_n = (4/25) (2 l_n - l_{n-1} + 1), n >= 1.
  Rat r(std::size_t n) const;
  /// s_n = r_{n+1} + r_n.
  Rat s(std::size_t n) const;
  /// lc(a_i): from the first four quotients for i <= 4, else the sign and
  /// r/s table.
  Rat lambda(std::size_t i) const;

  Poly a_poly(std::size_t n) const;        // A_n
  Poly b_poly(std::size_t n) const;        // B_n
  Poly s_poly(std::size_t n) const;        // S_n
  Poly s_prime_poly(std::size_t n) const;  // S'_n

  TheoremQuadruple quadruple(std::size_t n) const;

  /// (a_1, a_2, a_3, a_4) = (T-2, T/2+1/4, 8T/5+76/25, -125T/48+25/24).
  static std::array<Poly, 4> e0();
  /// (R_1, R'_1).
  static std::pair<Poly, Poly> r1_pair();

  /// Runs one identity at n. Identities with required_depth > 0 need an
  /// expansion of theta certified that deep; throws InsufficientDepth
  /// otherwise and std::invalid_argument when n < min_n(id).
  CheckResult check(Identity id, std::size_t n, const CFExpansion* expansion = nullptr) const;

  /// Compares a_1..a_4 against e0().
  CheckResult check_e0(const CFExpansion& expansion) const;
  /// Compares a_{4n+1}..a_{4n+4} against quadruple(n).
  CheckResult check_quadruple(const CFExpansion& expansion, std::size_t n) const;

 private:
  std::size_t exponent(const mpz_class& twice_e, std::size_t n) const;

  const LengthSeq* lengths_;
  mutable std::mutex mu_;
  mutable std::vector<std::optional<Rat>> r_memo_;
};

const ClosedForms& closed_forms();

/// (E_0) followed by (E_n) for 1 <= n <= n_max. Throws InsufficientDepth
/// unless the expansion certifies 4 n_max + 4 quotients.
std::vector<CheckResult> verify_suite(const ClosedForms& forms, const CFExpansion& expansion, std::size_t n_max);

/// Every identity at every n in [min_n, n_max] (only n = 1 for (9)).
/// Identities that need an expansion are run when `expansion` is certified
/// deep enough and skipped otherwise.
std::vector<CheckResult> identity_suite(const ClosedForms& forms, std::size_t n_max,
                                        const CFExpansion* expansion);

}  // namespace cfrac
