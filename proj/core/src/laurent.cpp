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

#include "cfrac/laurent.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cfrac/errors.hpp"

namespace cfrac {
namespace {

class FunctionSource final : public CoefficientSource {
 public:
  FunctionSource(std::function<Rat(std::size_t)> fn, std::string name, bool irrational)
      : fn_(std::move(fn)), name_(std::move(name)), irrational_(irrational) {}

  Rat coefficient(std::size_t i) const override {
    if (i == 0) throw std::out_of_range("series coefficients start at index 1");
    return fn_(i);
  }
  bool known_irrational() const override { return irrational_; }
  std::string name() const override { return name_; }

 private:
  std::function<Rat(std::size_t)> fn_;
  std::string name_;
  bool irrational_;
};

class RationalFunctionSource final : public CoefficientSource {
 public:
  RationalFunctionSource(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational source: zero denominator");
    if (!(num_.degree() < den_.degree())) {
      throw std::invalid_argument("rational source: need deg num < deg den");
    }
  }

  Rat coefficient(std::size_t i) const override {
    if (i == 0) throw std::out_of_range("series coefficients start at index 1");
    return prefix(i).back();
  }

  std::vector<Rat> prefix(std::size_t n) const override {
    std::lock_guard lock(mu_);
    if (cache_.size() < n) cache_ = laurent_coefficients(num_, den_, n);
    return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(n)};
  }

  std::string name() const override { return "rational(" + to_string(num_) + " / " + to_string(den_) + ")"; }

 private:
  Poly num_;
  Poly den_;
  mutable std::mutex mu_;
  mutable std::vector<Rat> cache_;
};

}  // namespace

std::vector<Rat> CoefficientSource::prefix(std::size_t n) const {
  std::vector<Rat> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(coefficient(i));
  return out;
}

SourcePtr function_source(std::function<Rat(std::size_t)> fn, std::string name, bool known_irrational) {
  return std::make_shared<FunctionSource>(std::move(fn), std::move(name), known_irrational);
}

SourcePtr rational_function_source(Poly num, Poly den) {
  return std::make_shared<RationalFunctionSource>(std::move(num), std::move(den));
}

// Matching the coefficient of T^{D-i} in num = den * sum c_j T^{-j} gives
//   d_D c_i = num_{D-i} - sum_{0 < D-j < i} d_j c_{i-(D-j)}.
std::vector<Rat> laurent_coefficients(const Poly& num, const Poly& den, std::size_t n) {
  if (den.is_zero()) throw std::domain_error("laurent_coefficients: zero denominator");
  if (!(num.degree() < den.degree())) {
    throw std::invalid_argument("laurent_coefficients: need deg num < deg den");
  }
  const std::size_t dd = den.deg();
  const Rat inv = den.leading_coeff().inverse();
  std::vector<Rat> c(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    Rat v = i <= dd ? num.coefficient(dd - i) : Rat();
    for (std::size_t gap = 1; gap < i && gap <= dd; ++gap) {
      const Rat& d = den.coefficient(dd - gap);
      if (!d.is_zero()) v -= d * c[i - gap];
    }
    c[i] = v * inv;
  }
  c.erase(c.begin());
  return c;
}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coefficients) : TruncatedSeries(std::move(coefficients), nullptr) {}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coefficients, SourcePtr source)
    : coeffs_(std::move(coefficients)), source_(std::move(source)) {
  if (coeffs_.empty()) throw std::invalid_argument("truncated series needs precision >= 1");
}

TruncatedSeries TruncatedSeries::from_source(SourcePtr source, std::size_t precision) {
  if (!source) throw std::invalid_argument("from_source: null source");
  if (precision == 0) throw std::invalid_argument("from_source: precision must be >= 1");
  auto coeffs = source->prefix(precision);
  if (coeffs.size() != precision) throw std::runtime_error("source returned a short prefix");
  return TruncatedSeries(std::move(coeffs), std::move(source));
}

const Rat& TruncatedSeries::coefficient(std::size_t i) const {
  if (i == 0 || i > coeffs_.size()) throw std::out_of_range("series index out of range");
  return coeffs_[i - 1];
}

TruncatedSeries TruncatedSeries::extend(std::size_t new_precision) const {
  if (!source_) throw std::logic_error("extend: series has no coefficient source");
  if (new_precision <= precision()) {
    throw std::invalid_argument("extend: new precision " + std::to_string(new_precision) +
                                " does not exceed " + std::to_string(precision()));
  }
  auto all = source_->prefix(new_precision);
  std::vector<Rat> coeffs = coeffs_;
  coeffs.insert(coeffs.end(), all.begin() + static_cast<std::ptrdiff_t>(precision()), all.end());
  return TruncatedSeries(std::move(coeffs), source_);
}

TruncatedSeries TruncatedSeries::truncate(std::size_t n) const {
  if (n == 0 || n > precision()) throw std::out_of_range("truncate: precision out of range");
  return TruncatedSeries({coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)}, source_);
}

RationalFunction TruncatedSeries::to_rational() const {
  const std::size_t n = precision();
  std::vector<Rat> num(n);
  for (std::size_t i = 1; i <= n; ++i) num[n - i] = coeffs_[i - 1];
  return {Poly(std::move(num)), Poly::monomial(Rat(1), n)};
}

std::string TruncatedSeries::to_json() const {
  nlohmann::ordered_json j;
  j["N"] = precision();
  auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_) arr.push_back(c.to_string());
  return j.dump();
}

TruncatedSeries TruncatedSeries::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("series JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("N") || !j.contains("coeffs") || !j["coeffs"].is_array() ||
      !j["N"].is_number_unsigned()) {
    throw ParseError("series JSON must be {\"N\": n, \"coeffs\": [...]}");
  }
  const auto n = j["N"].get<std::size_t>();
  std::vector<Rat> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_string()) {
      coeffs.push_back(Rat::parse(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw ParseError("series JSON coefficients must be \"p/q\" strings");
    }
  }
  if (coeffs.size() != n) throw ParseError("series JSON: N does not match the number of coefficients");
  if (n == 0) throw ParseError("series JSON: N must be >= 1");
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace cfrac
