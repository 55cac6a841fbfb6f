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

#include "cfrac/errors.hpp"
#include "cfrac/laurent.hpp"
#include "cfrac/word.hpp"
#include "support/oracles.hpp"

using namespace cfrac;

namespace {

std::vector<Rat> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<Rat> coeffs(const TruncatedSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

}  // namespace

TEST(Laurent, FromThetaSource) {
  EXPECT_EQ(coeffs(TruncatedSeries::from_source(theta_source(), 4)), ints({1, 2, 2, 1}));
  EXPECT_EQ(coeffs(TruncatedSeries::from_source(theta_source(), 12)), ints({1, 2, 2, 1, 2, 1, 2, 1, 2, 2, 1, 2}));
}

TEST(Laurent, FromConstantSource) {
  auto ones = function_source([](std::size_t) { return Rat(1); }, "ones");
  EXPECT_EQ(coeffs(TruncatedSeries::from_source(ones, 3)), ints({1, 1, 1}));
  EXPECT_THROW(TruncatedSeries::from_source(ones, 0), std::invalid_argument);
}

TEST(Laurent, SourceFailurePropagates) {
  auto bad = function_source([](std::size_t i) -> Rat {
    if (i > 3) throw std::runtime_error("source exhausted");
    return Rat(1);
  });
  const auto s = TruncatedSeries::from_source(bad, 3);
  EXPECT_THROW(s.extend(5), std::runtime_error);
  EXPECT_THROW(TruncatedSeries::from_source(bad, 4), std::runtime_error);
}

TEST(Laurent, Extend) {
  const auto s = TruncatedSeries::from_source(theta_source(), 4);
  const auto t = s.extend(5);
  EXPECT_EQ(coeffs(t), ints({1, 2, 2, 1, 2}));
  EXPECT_THROW(s.extend(4), std::invalid_argument);
  EXPECT_THROW(s.extend(3), std::invalid_argument);
  EXPECT_THROW(TruncatedSeries(ints({1, 2})).extend(3), std::logic_error);
}

TEST(Laurent, ExtendIsPrefixStable) {
  const auto s = TruncatedSeries::from_source(theta_source(), 100);
  const auto t = s.extend(200);
  EXPECT_EQ(t.truncate(100), s);
  EXPECT_EQ(t.precision(), 200u);
}

TEST(Laurent, ToRational) {
  const auto [num, den] = TruncatedSeries(ints({1, 2, 2, 1})).to_rational();
  EXPECT_EQ(num, parse_poly("T^3 + 2*T^2 + 2*T + 1"));
  EXPECT_EQ(den, parse_poly("T^4"));

  const auto [n1, d1] = TruncatedSeries(ints({1})).to_rational();
  EXPECT_EQ(n1, Poly(1));
  EXPECT_EQ(d1, Poly::t());
}

TEST(Laurent, ToRationalThetaMatchesWord) {
  const auto [num, den] = TruncatedSeries::from_source(theta_source(), 30).to_rational();
  const auto letters = word_prefix(30);
  EXPECT_EQ(den, Poly::monomial(Rat(1), 30));
  for (std::size_t i = 1; i <= 30; ++i) EXPECT_EQ(num.coefficient(30 - i), Rat(letters[i - 1])) << i;
}

TEST(Laurent, ToRationalRoundTrip) {
  cfrac::testing::PolyGen gen(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> c(gen.uniform(1, 20));
    for (auto& x : c) x = gen.rat();
    const TruncatedSeries s(c);
    const auto [num, den] = s.to_rational();
    ASSERT_EQ(cfrac::testing::series_by_long_division(num, den, c.size()), c);
  }
}

TEST(Laurent, RationalFunctionSource) {
  // 1/(T - 1) = sum T^{-i}; (T + 1)/(T^2 - 2) has c_1 = 1, c_2 = 1, c_3 = 2, c_4 = 2.
  EXPECT_EQ(rational_function_source(Poly(1), parse_poly("T - 1"))->prefix(5), ints({1, 1, 1, 1, 1}));
  EXPECT_EQ(rational_function_source(parse_poly("T + 1"), parse_poly("T^2 - 2"))->prefix(4), ints({1, 1, 2, 2}));
  EXPECT_THROW(rational_function_source(parse_poly("T^2"), parse_poly("T - 1")), std::invalid_argument);

  cfrac::testing::PolyGen gen(22);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly den = gen.poly_of_degree(gen.uniform(1, 6));
    const Poly num = gen.poly(den.deg() - 1);
    ASSERT_EQ(laurent_coefficients(num, den, 25), cfrac::testing::series_by_long_division(num, den, 25));
  }
}

TEST(Laurent, JsonForm) {
  const TruncatedSeries s({Rat(1), Rat(-1, 2), Rat(3)});
  EXPECT_EQ(s.to_json(), R"({"N":3,"coeffs":["1","-1/2","3"]})");
  EXPECT_EQ(TruncatedSeries::from_json(R"({"N": 3, "coeffs": ["1", "-1/2", "3"]})"), s);
  EXPECT_EQ(TruncatedSeries::from_json(s.to_json()), s);
  EXPECT_THROW(TruncatedSeries::from_json(R"({"N": 2, "coeffs": ["1"]})"), ParseError);
  EXPECT_THROW(TruncatedSeries::from_json(R"({"coeffs": ["1"]})"), ParseError);
  EXPECT_THROW(TruncatedSeries::from_json(R"({"N": 1, "coeffs": ["x"]})"), ParseError);
  EXPECT_THROW(TruncatedSeries::from_json("not json"), ParseError);
}
