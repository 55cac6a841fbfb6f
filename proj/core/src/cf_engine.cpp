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

#include "cfrac/cf_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cfrac/errors.hpp"

namespace cfrac {
namespace {

void check_index(std::size_t n, std::size_t lo, std::size_t hi, const char* what) {
  if (n < lo || n > hi) {
    throw InsufficientDepth(std::string(what) + " index " + std::to_string(n) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// theta_N - x_k / y_k has valuation deg y_k + deg y_{k+1}; when that exceeds
// N the convergent reproduces every known coefficient.
bool matches_all_known(const CFExpansion& e, std::size_t precision) {
  const std::size_t k = e.certified();
  if (e.terminated() && k == e.size()) return true;
  if (k == 0 || e.size() <= k) return false;
  return e.y(k).deg() + e.y(k + 1).deg() >= precision + 1;
}

}  // namespace

const Poly& CFExpansion::a(std::size_t n) const {
  check_index(n, 1, size(), "partial quotient");
  return quotients_[n - 1];
}

const Poly& CFExpansion::x(std::size_t n) const {
  check_index(n, 0, size(), "continuant");
  return x_[n];
}

const Poly& CFExpansion::y(std::size_t n) const {
  check_index(n, 0, size(), "continuant");
  return y_[n];
}

const Rat& CFExpansion::lambda(std::size_t n) const { return a(n).leading_coeff(); }

const Rat& CFExpansion::mu(std::size_t n) const {
  check_index(n, 0, size(), "mu");
  return mu_[n];
}

CFExpansion CFExpansion::prefix(std::size_t k) const {
  check_index(k, 0, size(), "prefix length");
  CFExpansion out;
  out.quotients_.assign(quotients_.begin(), quotients_.begin() + static_cast<std::ptrdiff_t>(k));
  out.x_.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(k + 1));
  out.y_.assign(y_.begin(), y_.begin() + static_cast<std::ptrdiff_t>(k + 1));
  out.mu_.assign(mu_.begin(), mu_.begin() + static_cast<std::ptrdiff_t>(k + 1));
  out.certified_ = std::min(certified_, k);
  out.precision_ = precision_;
  out.terminated_ = terminated_ && k == size();
  return out;
}

std::size_t certified_length(const CFExpansion& e, std::size_t precision) {
  std::size_t k = 0;
  while (k < e.size() && 2 * e.y(k + 1).deg() <= precision) ++k;
  return k;
}

CFExpansion expand(const Poly& num, const Poly& den, std::optional<std::size_t> precision,
                   std::size_t max_terms) {
  if (den.is_zero()) throw std::domain_error("expand: zero denominator");
  if (!(num.degree() < den.degree())) {
    throw std::invalid_argument("expand: need deg num < deg den (zero polynomial part)");
  }

  CFExpansion e;
  e.precision_ = precision;
  Poly p = den;
  Poly q = num;
  while (e.size() < max_terms && !q.is_zero()) {
    auto [a, r] = divrem(p, q);
    const std::size_t n = e.size() + 1;
    if (n == 1) {
      e.x_.emplace_back(1);
      e.y_.push_back(a);
    } else {
      e.x_.push_back(a * e.x_[n - 1] + e.x_[n - 2]);
      e.y_.push_back(a * e.y_[n - 1] + e.y_[n - 2]);
    }
    e.mu_.push_back(e.mu_[n - 1] * a.leading_coeff());
    if (e.y_[n].leading_coeff() != e.mu_[n]) {
      throw std::logic_error("expand: lc(y_n) disagrees with the product of lambdas");
    }
    e.quotients_.push_back(std::move(a));
    p = std::move(q);
    q = std::move(r);
  }
  e.terminated_ = q.is_zero();
  e.certified_ = precision ? certified_length(e, *precision) : e.size();
  return e;
}

CFExpansion expand(const TruncatedSeries& series, std::size_t max_terms) {
  const auto [num, den] = series.to_rational();
  return expand(num, den, series.precision(), max_terms);
}

Poly continuant(std::span<const Poly> qs) {
  Poly prev;      // K_{-1}
  Poly cur(1);    // K_0
  for (const auto& q : qs) {
    Poly next = q * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly delta(const CFExpansion& e, std::size_t m, std::size_t n) {
  if (m < 1 || m >= n || n > e.size()) {
    throw InsufficientDepth("delta: need 1 <= m < n <= " + std::to_string(e.size()) + ", got m=" +
                            std::to_string(m) + " n=" + std::to_string(n));
  }
  return e.x(n) * e.y(m) - e.x(m) * e.y(n);
}

Convergent convergent(const CFExpansion& e, std::size_t n) {
  if (n < 1 || n > e.certified()) {
    throw InsufficientDepth("convergent " + std::to_string(n) + " beyond certified prefix of " +
                            std::to_string(e.certified()));
  }
  return {e.x(n), e.y(n), e.x(n).monic(), e.y(n).monic()};
}

CFExpansion certify_by_doubling(const SourcePtr& source, std::size_t target_terms,
                                std::size_t initial_precision, std::size_t precision_cap) {
  if (!source) throw std::invalid_argument("certify_by_doubling: null source");
  if (target_terms == 0) throw std::invalid_argument("certify_by_doubling: target_terms must be >= 1");
  if (initial_precision == 0) throw std::invalid_argument("certify_by_doubling: N0 must be >= 1");
  if (precision_cap < initial_precision) {
    throw std::invalid_argument("certify_by_doubling: precision cap below N0");
  }

  std::size_t precision = initial_precision;
  auto series = TruncatedSeries::from_source(source, precision);
  std::optional<CFExpansion> rational_candidate;
  for (;;) {
    CFExpansion e = expand(series, target_terms);
    if (e.certified() >= target_terms) {
      // Stability check at one further doubling; deliberately not bounded by the cap.
      const CFExpansion check = expand(series.extend(2 * precision), target_terms);
      for (std::size_t n = 1; n <= target_terms; ++n) {
        if (n > check.size() || check.a(n) != e.a(n)) {
          throw CertificationFailure("partial quotient " + std::to_string(n) + " changed between N=" +
                                     std::to_string(precision) + " and N=" +
                                     std::to_string(2 * precision));
        }
      }
      return e.prefix(target_terms);
    }

    if (!source->known_irrational() && matches_all_known(e, precision)) {
      CFExpansion cand = e.prefix(e.certified());
      if (rational_candidate && rational_candidate->partial_quotients().size() == cand.size() &&
          std::equal(cand.partial_quotients().begin(), cand.partial_quotients().end(),
                     rational_candidate->partial_quotients().begin())) {
        cand.terminated_ = true;
        return cand;
      }
      rational_candidate = std::move(cand);
    } else {
      rational_candidate.reset();
    }

    if (precision > precision_cap / 2) {
      throw PrecisionCapExceeded("certified " + std::to_string(e.certified()) + " of " +
                                 std::to_string(target_terms) + " partial quotients at N=" +
                                 std::to_string(precision) + "; cap " + std::to_string(precision_cap) +
                                 " reached (the series may be rational or the cap too small)");
    }
    precision *= 2;
    series = series.extend(precision);
  }
}

std::vector<MeasurePoint> measure_estimate(const CFExpansion& e) {
  if (e.certified() < 2) throw InsufficientDepth("measure_estimate needs at least 2 certified quotients");
  std::vector<MeasurePoint> out;
  out.reserve(e.certified() - 1);
  for (std::size_t n = 1; n < e.certified(); ++n) {
    const std::size_t dy = e.y(n).deg();
    if (dy == 0) throw std::domain_error("measure_estimate: deg y_" + std::to_string(n) + " is 0");
    const long da = static_cast<long>(e.a(n + 1).deg());
    out.push_back({n, Rat(2) + Rat(mpz_class(da), mpz_class(static_cast<unsigned long>(dy)))});
  }
  return out;
}

}  // namespace cfrac
