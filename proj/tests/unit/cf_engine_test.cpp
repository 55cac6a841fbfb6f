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

#include <gtest/gtest.h>

#include "cfrac/cf_engine.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/theorem_forms.hpp"
#include "cfrac/word.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace cfrac;

namespace {

const Poly T = Poly::t();

CFExpansion theta_at(std::size_t n, std::size_t terms) {
  return expand(TruncatedSeries::from_source(theta_source(), n), terms);
}

}  // namespace

TEST(Expand, FirstSixQuotientsOfTheta) {
  const auto e = theta_at(30, 6);
  ASSERT_EQ(e.size(), 6u);
  EXPECT_EQ(e.certified(), 6u);
  EXPECT_EQ(e.a(1), parse_poly("T - 2"));
  EXPECT_EQ(e.a(2), parse_poly("1/2*T + 1/4"));
  EXPECT_EQ(e.a(3), parse_poly("8/5*T + 76/25"));
  EXPECT_EQ(e.a(4), parse_poly("-125/48*T + 25/24"));
  EXPECT_EQ(e.a(5), Rat(144, 625) * parse_poly("T^2 + T + 2"));
  EXPECT_EQ(e.a(6), Rat(625, 528) * parse_poly("T - 1"));
  EXPECT_EQ(e.source_precision(), std::optional<std::size_t>(30));
  EXPECT_FALSE(e.terminated());
}

TEST(Expand, MuMilestones) {
  const auto e = theta_at(30, 8);
  ASSERT_GE(e.certified(), 8u);
  EXPECT_EQ(e.mu(4), Rat(-25, 12));
  EXPECT_EQ(e.mu(8), Rat(-25, 32));
  EXPECT_EQ(e.mu(0), Rat(1));
  EXPECT_EQ(e.lambda(2), Rat(1, 2));
}

TEST(Expand, ContinuantSeeds) {
  const auto e = theta_at(30, 3);
  EXPECT_EQ(e.x(0), Poly());
  EXPECT_EQ(e.x(1), Poly(1));
  EXPECT_EQ(e.y(0), Poly(1));
  EXPECT_EQ(e.y(1), e.a(1));
  EXPECT_EQ(e.x(2), e.a(2));
  EXPECT_EQ(e.y(2), e.a(1) * e.a(2) + Poly(1));
  EXPECT_EQ(e.x(3), e.a(2) * e.a(3) + Poly(1));
  EXPECT_THROW(e.a(0), InsufficientDepth);
  EXPECT_THROW(e.a(4), InsufficientDepth);
}

TEST(Expand, ExactRationalTerminates) {
  const auto e = expand(Poly(1), T - Poly(2), std::nullopt, 10);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.a(1), T - Poly(2));
  EXPECT_TRUE(e.terminated());
  EXPECT_EQ(e.certified(), 1u);
  EXPECT_FALSE(e.source_precision().has_value());
}

TEST(Expand, Preconditions) {
  EXPECT_THROW(expand(Poly(1), Poly(), std::nullopt, 5), std::domain_error);
  EXPECT_THROW(expand(T, T + Poly(1), std::nullopt, 5), std::invalid_argument);
  const auto zero = expand(Poly(), T, std::nullopt, 5);
  EXPECT_EQ(zero.size(), 0u);
  EXPECT_TRUE(zero.terminated());
}

TEST(Expand, MaxTermsStopsEarly) {
  const auto e = theta_at(64, 3);
  EXPECT_EQ(e.size(), 3u);
  EXPECT_EQ(e.certified(), 3u);
}

TEST(Expand, ReconstructionQuality) {
  const auto series = TruncatedSeries::from_source(theta_source(), 200);
  const auto [num, den] = series.to_rational();
  const auto e = expand(num, den, 200, 20);
  for (std::size_t k = 1; k < e.size(); ++k) {
    const Poly residual = num * e.y(k) - den * e.x(k);
    // deg(num y_k - den x_k) = deg den - deg y_{k+1}
    ASSERT_EQ(residual.deg() + e.y(k + 1).deg(), den.deg()) << k;
    const auto folded = cfrac::testing::fold_continued_fraction(
        {e.partial_quotients().begin(), e.partial_quotients().begin() + static_cast<std::ptrdiff_t>(k)});
    ASSERT_EQ(folded.num * e.y(k), folded.den * e.x(k)) << k;
  }
}

// The certification rule must never claim a quotient that a much longer
// truncation disagrees with, and is at most one quotient conservative.
TEST(Certification, SoundAndTightAgainstLongExpansion) {
  const auto reference = theta_at(2048, 28);
  ASSERT_EQ(reference.certified(), 28u);
  for (std::size_t n = 4; n <= 400; ++n) {
    const auto e = theta_at(n, 24);
    std::size_t agree = 0;
    while (agree < e.size() && e.a(agree + 1) == reference.a(agree + 1)) ++agree;
    ASSERT_LE(e.certified(), agree) << "N=" << n;
    ASSERT_LE(agree, e.certified() + 1) << "N=" << n;
  }
}

TEST(Certification, WeakerPairRuleWouldOvercertify) {
  // At N = 11, deg y_4 + deg y_5 = 4 + 6 <= N - 1, but a_5 is still wrong.
  const auto e = theta_at(11, 6);
  ASSERT_GE(e.size(), 5u);
  EXPECT_LE(e.y(4).deg() + e.y(5).deg(), 10u);
  EXPECT_NE(e.a(5), Rat(144, 625) * parse_poly("T^2 + T + 2"));
  EXPECT_EQ(e.certified(), 4u);
}

TEST(Continuant, Values) {
  EXPECT_EQ(continuant({}), Poly(1));
  const std::vector<Poly> one{T + Poly(3)};
  EXPECT_EQ(continuant(one), T + Poly(3));
  const std::vector<Poly> two{T, T};
  EXPECT_EQ(continuant(two), parse_poly("T^2 + 1"));
  const std::vector<Poly> three{T, T, T};
  EXPECT_EQ(continuant(three), parse_poly("T^3 + 2*T"));
  // <x, y, z> = xyz + x + z
  const Poly x = parse_poly("T - 1"), y = parse_poly("2*T"), z = parse_poly("T^2 + 1/3");
  const std::vector<Poly> xyz{x, y, z};
  EXPECT_EQ(continuant(xyz), x * y * z + x + z);
}

TEST(Delta, Identities) {
  const auto e = theta_at(64, 10);
  for (std::size_t n = 2; n <= 10; ++n) {
    EXPECT_EQ(delta(e, n - 1, n), Poly(n % 2 == 0 ? Rat(-1) : Rat(1))) << n;
  }
  EXPECT_EQ(delta(e, 4, 6), e.mu(6) * e.mu(4) * (T - Poly(1)));
  EXPECT_EQ(delta(e, 4, 6), e.a(6));
  EXPECT_EQ(delta(e, 1, 3), -e.a(3));
  EXPECT_THROW(delta(e, 0, 3), InsufficientDepth);
  EXPECT_THROW(delta(e, 3, 3), InsufficientDepth);
  EXPECT_THROW(delta(e, 3, 11), InsufficientDepth);
}

TEST(Convergent, MatchesClosedForms) {
  const auto e = theta_at(64, 8);
  EXPECT_EQ(convergent(e, 4).y_star, parse_poly("T^4 - T^2"));
  EXPECT_EQ(convergent(e, 6).y_star, parse_poly("T^7 - 1"));
  EXPECT_EQ(convergent(e, 4).x_star, parse_poly("T^3 + 2*T^2 + T - 1"));
  EXPECT_EQ(convergent(e, 6).x_star, parse_poly("T^6 + 2*T^5 + 2*T^4 + T^3 + 2*T^2 + T + 2"));
  const auto c = convergent(e, 4);
  EXPECT_EQ(c.y, e.mu(4) * c.y_star);
  EXPECT_EQ(c.x, e.mu(4) * c.x_star);
  EXPECT_THROW(convergent(e, 0), InsufficientDepth);
  EXPECT_THROW(convergent(theta_at(11, 8), 5), InsufficientDepth);
}

TEST(CertifyByDoubling, ThetaEightQuotients) {
  const auto e = certify_by_doubling(theta_source(), 8, 16);
  ASSERT_EQ(e.size(), 8u);
  EXPECT_EQ(e.certified(), 8u);
  const auto& forms = closed_forms();
  EXPECT_TRUE(forms.check_e0(e).ok);
  EXPECT_TRUE(forms.check_quadruple(e, 1).ok);
}

TEST(CertifyByDoubling, ThetaDepthSixIsStable) {
  const auto& e = cfrac::testing::theta_depth6();
  ASSERT_EQ(e.certified(), 28u);
  const auto again = certify_by_doubling(theta_source(), 28, 128);
  for (std::size_t n = 1; n <= 28; ++n) EXPECT_EQ(again.a(n), e.a(n)) << n;
}

TEST(CertifyByDoubling, RationalSourceTerminates) {
  const auto geometric = rational_function_source(Poly(1), T - Poly(1));
  const auto e = certify_by_doubling(geometric, 10, 4);
  EXPECT_TRUE(e.terminated());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.a(1), T - Poly(1));

  const auto two = certify_by_doubling(rational_function_source(T + Poly(1), parse_poly("T^2 - 2")), 10, 4);
  EXPECT_TRUE(two.terminated());
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two.a(1), T - Poly(1));
  EXPECT_EQ(two.a(2), -T - Poly(1));
}

TEST(CertifyByDoubling, RationalValuedButDeclaredIrrationalHitsCap) {
  auto ones = function_source([](std::size_t) { return Rat(1); }, "ones", /*known_irrational=*/true);
  EXPECT_THROW(certify_by_doubling(ones, 5, 4, 256), PrecisionCapExceeded);
}

TEST(CertifyByDoubling, CapAndArguments) {
  EXPECT_THROW(certify_by_doubling(theta_source(), 28, 64, 256), PrecisionCapExceeded);
  EXPECT_THROW(certify_by_doubling(theta_source(), 0, 64), std::invalid_argument);
  EXPECT_THROW(certify_by_doubling(theta_source(), 4, 0), std::invalid_argument);
  EXPECT_THROW(certify_by_doubling(theta_source(), 4, 64, 32), std::invalid_argument);
  EXPECT_THROW(certify_by_doubling(nullptr, 4, 64), std::invalid_argument);
}

TEST(Measure, ThetaEstimates) {
  const auto e = certify_by_doubling(theta_source(), 25, 64);
  const auto pts = measure_estimate(e);
  ASSERT_EQ(pts.size(), 24u);
  EXPECT_EQ(pts.front().n, 1u);
  EXPECT_EQ(pts.front().nu, Rat(3));
  EXPECT_EQ(pts.back().n, 24u);
  EXPECT_EQ(pts.back().nu, Rat(2) + Rat(287, 289));
  for (const auto& p : pts) EXPECT_LE(p.nu, Rat(3));
}

TEST(Measure, BoundedQuotientsApproachTwo) {
  const std::vector<Poly> qs(12, T);
  const auto f = cfrac::testing::fold_continued_fraction(qs);
  const auto e = expand(f.num, f.den, std::nullopt, 20);
  ASSERT_EQ(e.size(), 12u);
  for (const auto& p : measure_estimate(e)) EXPECT_EQ(p.nu, Rat(2) + Rat(1, static_cast<long>(p.n)));
}

TEST(Measure, NeedsTwoCertified) {
  EXPECT_THROW(measure_estimate(expand(Poly(1), T, std::nullopt, 4)), InsufficientDepth);
}

TEST(Prefix, KeepsInvariants) {
  const auto e = theta_at(64, 10);
  const auto p = e.prefix(5);
  EXPECT_EQ(p.size(), 5u);
  EXPECT_EQ(p.certified(), std::min<std::size_t>(5, e.certified()));
  EXPECT_EQ(p.y(5), e.y(5));
  EXPECT_THROW(e.prefix(11), InsufficientDepth);
}
