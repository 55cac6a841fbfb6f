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

#include "cfrac/theorem_forms.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cfrac/errors.hpp"

namespace cfrac {
namespace {

// Largest exponent materialized as a dense polynomial.
constexpr std::size_t kMaxExponent = std::size_t{1} << 24;

Poly t_minus_one() { return Poly{Rat(-1), Rat(1)}; }

Poly t_pow(std::size_t k) { return Poly::monomial(Rat(1), k); }

Rat sign_pow(std::size_t k) { return k % 2 == 0 ? Rat(1) : Rat(-1); }  // (-1)^k

CheckResult make_result(std::string check, std::size_t n, Poly residual) {
  const bool ok = residual.is_zero();
  return {std::move(check), n, ok, std::move(residual)};
}

// First nonzero residual among several equalities.
Poly first_nonzero(std::initializer_list<Poly> residuals) {
  for (const auto& r : residuals) {
    if (!r.is_zero()) return r;
  }
  return Poly();
}

const CFExpansion& need(const CFExpansion* e, std::size_t depth, Identity id, std::size_t n) {
  if (e == nullptr || e->certified() < depth) {
    throw InsufficientDepth(label(id) + " at n=" + std::to_string(n) + " needs " + std::to_string(depth) +
                            " certified partial quotients, have " +
                            std::to_string(e == nullptr ? 0 : e->certified()));
  }
  return *e;
}

}  // namespace

std::string label(Identity id) {
  switch (id) {
    case Identity::Eq6: return "(6)";
    case Identity::Eq7: return "(7)";
    case Identity::Eq8: return "(8)";
    case Identity::Eq9: return "(9)";
    case Identity::Eq13: return "(13)";
    case Identity::Eq15: return "(15)";
    case Identity::Eq19: return "(19)";
    case Identity::Eq25: return "(25)";
    case Identity::Eq26: return "(26)";
    case Identity::Eq30: return "(30)";
    case Identity::Eq36: return "(36)";
    case Identity::I: return "(I)";
    case Identity::III: return "(III)";
    case Identity::R: return "(R)";
    case Identity::LLink: return "(L-link)";
  }
  return "(?)";
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = {
      Identity::Eq6,  Identity::Eq7,  Identity::Eq8,  Identity::Eq9,  Identity::Eq13,
      Identity::Eq15, Identity::Eq19, Identity::Eq25, Identity::Eq26, Identity::Eq30,
      Identity::Eq36, Identity::I,    Identity::III,  Identity::R,    Identity::LLink,
  };
  return ids;
}

std::optional<Identity> parse_identity(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) {
      key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  for (Identity id : all_identities()) {
    std::string l = label(id);
    l = l.substr(1, l.size() - 2);
    std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return std::toupper(c); });
    if (l == key) return id;
  }
  return std::nullopt;
}

std::size_t min_n(Identity id) {
  switch (id) {
    case Identity::Eq26:
    case Identity::Eq30:
    case Identity::I:
      return 2;
    default:
      return 1;
  }
}

std::size_t required_depth(Identity id, std::size_t n) {
  switch (id) {
    case Identity::Eq6: return 4 * n;
    case Identity::Eq7: return 4 * n + 2;
    case Identity::Eq9: return 6;
    case Identity::Eq36: return 4 * n + 1;
    case Identity::Eq25: return 4 * n + 3;
    case Identity::Eq30:
    case Identity::I:
      return 4 * n + 2;
    case Identity::Eq8:
    case Identity::Eq13:
    case Identity::Eq19:
    case Identity::III:
      return 4 * n + 4;
    case Identity::Eq15:
    case Identity::Eq26:
    case Identity::R:
    case Identity::LLink:
      return 0;
  }
  return 0;
}

std::size_t ClosedForms::exponent(const mpz_class& twice_e, std::size_t n) const {
  if (twice_e % 2 != 0) {
    throw std::logic_error("parity guard failed at n=" + std::to_string(n) + ": l_n + l_{n-1} must be odd");
  }
  const mpz_class e = twice_e / 2;
  if (!e.fits_ulong_p() || e.get_ui() > kMaxExponent) {
    throw std::length_error("exponent at n=" + std::to_string(n) + " too large to materialize");
  }
  return static_cast<std::size_t>(e.get_ui());
}

Rat ClosedForms::r(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("r_n is defined for n >= 1");
  std::lock_guard lock(mu_);
  if (r_memo_.size() <= n) r_memo_.resize(n + 1);
  if (!r_memo_[n]) r_memo_[n] = Rat(4, 25) * Rat(lengths_->big_l(n), mpz_class(1));
  return *r_memo_[n];
}

Rat ClosedForms::s(std::size_t n) const { return r(n + 1) + r(n); }

Rat ClosedForms::lambda(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("lambda_i is defined for i >= 1");
  if (i <= 4) return e0()[i - 1].leading_coeff();
  const std::size_t n = (i - 1) / 4;
  const Rat sign = sign_pow(n + 1);
  switch (i - 4 * n) {
    case 1: return sign * r(n).pow(2);
    case 2: return sign * (r(n) * s(n)).inverse();
    case 3: return sign * s(n).pow(2);
    default: return sign * (r(n + 1) * s(n)).inverse();
  }
}

Poly ClosedForms::a_poly(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("A_n is defined for n >= 1");
  const mpz_class l = lengths_->length(n);
  const mpz_class lp = lengths_->length(n - 1);
  const Poly numer = t_pow(exponent(3 * l + lp + 3, n)) + t_pow(exponent(l + lp + 1, n)) - Poly(2);
  auto [q, rem] = divrem(numer, t_minus_one());
  if (!rem.is_zero()) throw std::logic_error("A_n: nonzero remainder dividing by T-1");
  return q;
}

Poly ClosedForms::b_poly(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("B_n is defined for n >= 1");
  const mpz_class l = lengths_->length(n);
  const mpz_class lp = lengths_->length(n - 1);
  const Poly numer = t_pow(exponent(l + lp + 3, n)) - Poly(1);
  auto [q, rem] = divrem(numer, t_minus_one());
  if (!rem.is_zero()) throw std::logic_error("B_n: nonzero remainder dividing by T-1");
  return q;
}

Poly ClosedForms::s_poly(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("S_n is defined for n >= 1");
  const mpz_class l = lengths_->length(n);
  const mpz_class lp = lengths_->length(n - 1);
  const std::size_t shift = exponent(l + lp + 3, n);
  const std::size_t top = exponent(2 * (l + 1), n);
  return t_pow(shift + top) - t_pow(shift);
}

Poly ClosedForms::s_prime_poly(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("S'_n is defined for n >= 1");
  const mpz_class l = lengths_->length(n);
  const mpz_class lp = lengths_->length(n - 1);
  return t_pow(exponent(2 * (3 * l + lp + 4), n)) - Poly(1);
}

TheoremQuadruple ClosedForms::quadruple(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("quadruples are indexed from n = 1");
  TheoremQuadruple q;
  q.n = n;
  for (std::size_t j = 0; j < 4; ++j) q.lambdas[j] = lambda(4 * n + j + 1);
  q.a[0] = q.lambdas[0] * a_poly(n);
  q.a[1] = q.lambdas[1] * t_minus_one();
  q.a[2] = q.lambdas[2] * b_poly(n);
  q.a[3] = q.lambdas[3] * t_minus_one();
  return q;
}

std::array<Poly, 4> ClosedForms::e0() {
  return {
      Poly{Rat(-2), Rat(1)},
      Poly{Rat(1, 4), Rat(1, 2)},
      Poly{Rat(76, 25), Rat(8, 5)},
      Poly{Rat(25, 24), Rat(-125, 48)},
  };
}

std::pair<Poly, Poly> ClosedForms::r1_pair() {
  return {
      Poly{Rat(-1), Rat(1), Rat(2), Rat(1)},
      Poly{Rat(2), Rat(1), Rat(2), Rat(1), Rat(2), Rat(2), Rat(1)},
  };
}

CheckResult ClosedForms::check_e0(const CFExpansion& e) const {
  if (e.certified() < 4) throw InsufficientDepth("(E_0) needs 4 certified partial quotients");
  const auto expected = e0();
  Poly residual;
  for (std::size_t i = 0; i < 4 && residual.is_zero(); ++i) residual = e.a(i + 1) - expected[i];
  return make_result("(E_0)", 0, std::move(residual));
}

CheckResult ClosedForms::check_quadruple(const CFExpansion& e, std::size_t n) const {
  if (e.certified() < 4 * n + 4) {
    throw InsufficientDepth("(E_n) at n=" + std::to_string(n) + " needs " + std::to_string(4 * n + 4) +
                            " certified partial quotients");
  }
  const auto q = quadruple(n);
  Poly residual;
  for (std::size_t j = 0; j < 4 && residual.is_zero(); ++j) residual = e.a(4 * n + j + 1) - q.a[j];
  return make_result("(E_n)", n, std::move(residual));
}

CheckResult ClosedForms::check(Identity id, std::size_t n, const CFExpansion* expansion) const {
  if (n < min_n(id)) {
    throw std::invalid_argument(label(id) + " is stated for n >= " + std::to_string(min_n(id)));
  }
  if (id == Identity::Eq9 && n != 1) throw std::invalid_argument("(9) is stated for n = 1 only");

  const Poly tm1 = t_minus_one();
  const std::size_t depth = required_depth(id, n);
  const CFExpansion* e = depth > 0 ? &need(expansion, depth, id, n) : nullptr;
  // x*_k: the monic numerators that stand in for R_n and R'_n.
  auto x_star = [&](std::size_t k) { return e->x(k).monic(); };
  auto inv_mu = [&](std::size_t k) { return e->mu(k).inverse(); };

  Poly residual;
  switch (id) {
    case Identity::Eq6:
      residual = e->y(4 * n).monic() - s_poly(n);
      break;
    case Identity::Eq7:
      residual = e->y(4 * n + 2).monic() - s_prime_poly(n);
      break;
    case Identity::Eq8: {
      const Poly rn = x_star(4 * n), rpn = x_star(4 * n + 2), rn1 = x_star(4 * n + 4);
      const Poly sn = s_poly(n), spn = s_prime_poly(n), sn1 = s_poly(n + 1);
      const Poly rhs = sign_pow(n) * tm1;
      residual = first_nonzero({rn * spn - rpn * sn - rhs, sn1 * rpn - rn1 * spn - rhs});
      break;
    }
    case Identity::Eq9: {
      const auto [r1, rp1] = r1_pair();
      residual = first_nonzero({x_star(4) - r1, x_star(6) - rp1});
      break;
    }
    case Identity::Eq13: {
      const Rat sign = sign_pow(n + 1);
      residual = first_nonzero({
          e->a(4 * n + 2) - sign * e->mu(4 * n + 2) * e->mu(4 * n) * tm1,
          e->a(4 * n + 4) - sign * e->mu(4 * n + 2) * e->mu(4 * n + 4) * tm1,
      });
      break;
    }
    case Identity::Eq15:
      residual = s_poly(n) + s_poly(n + 1) - s_prime_poly(n) * (tm1 * b_poly(n) + Poly(1));
      break;
    case Identity::Eq19: {
      const Poly lhs = x_star(4 * n + 4) * s_poly(n) - x_star(4 * n) * s_poly(n + 1);
      residual = lhs - sign_pow(n + 1) * tm1 * (tm1 * b_poly(n) + Poly(1));
      break;
    }
    case Identity::Eq25: {
      const Rat lam = sign_pow(n + 1) * e->mu(4 * n + 2).pow(2).inverse();
      residual = e->a(4 * n + 3) - lam * b_poly(n);
      break;
    }
    case Identity::Eq26:
      residual = s_prime_poly(n) - s_prime_poly(n - 1) - s_poly(n) * (tm1 * a_poly(n) + Poly(2));
      break;
    case Identity::Eq30: {
      const Poly lhs = x_star(4 * n + 2) * s_prime_poly(n - 1) - s_prime_poly(n) * x_star(4 * n - 2);
      residual = lhs - sign_pow(n) * tm1 * (tm1 * a_poly(n) + Poly(2));
      break;
    }
    case Identity::Eq36: {
      const Rat lam = sign_pow(n + 1) * e->mu(4 * n).pow(2).inverse();
      residual = e->a(4 * n + 1) - lam * a_poly(n);
      break;
    }
    case Identity::I:
      residual = Poly(inv_mu(4 * n + 2) - inv_mu(4 * n - 2) - Rat(2) * inv_mu(4 * n));
      break;
    case Identity::III:
      residual = Poly(inv_mu(4 * n + 2) - inv_mu(4 * n) - inv_mu(4 * n + 4));
      break;
    case Identity::R: {
      if (n == 1) {
        residual = first_nonzero({Poly(r(1) - Rat(12, 25)), Poly(r(2) - Rat(32, 25))});
      } else {
        residual = Poly(r(n + 1) - Rat(2) * r(n) - r(n - 1));
      }
      if (residual.is_zero() && expansion != nullptr && expansion->certified() >= 4 * n + 2) {
        residual = first_nonzero({
            Poly(r(n) + expansion->mu(4 * n).inverse()),
            Poly(s(n) + expansion->mu(4 * n + 2).inverse()),
        });
      }
      break;
    }
    case Identity::LLink:
      residual = Poly(Rat(25, 4) * r(n) - Rat(lengths_->big_l(n), mpz_class(1)));
      break;
  }
  return make_result(label(id), n, std::move(residual));
}

std::vector<CheckResult> verify_suite(const ClosedForms& forms, const CFExpansion& expansion, std::size_t n_max) {
  std::vector<CheckResult> out;
  out.push_back(forms.check_e0(expansion));
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(forms.check_quadruple(expansion, n));
  return out;
}

std::vector<CheckResult> identity_suite(const ClosedForms& forms, std::size_t n_max,
                                        const CFExpansion* expansion) {
  std::vector<CheckResult> out;
  for (Identity id : all_identities()) {
    const std::size_t last = id == Identity::Eq9 ? std::min<std::size_t>(n_max, 1) : n_max;
    for (std::size_t n = min_n(id); n <= last; ++n) {
      const std::size_t depth = required_depth(id, n);
      if (depth > 0 && (expansion == nullptr || expansion->certified() < depth)) continue;
      out.push_back(forms.check(id, n, expansion));
    }
  }
  return out;
}

const ClosedForms& closed_forms() {
  static const ClosedForms forms;
  return forms;
}

}  // namespace cfrac
