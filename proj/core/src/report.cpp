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

#include "cfrac/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cfrac::report {
namespace {

using json = nlohmann::ordered_json;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string expansion_json(const CFExpansion& e) {
  json arr = json::array();
  for (std::size_t n = 1; n <= e.size(); ++n) {
    arr.push_back({
        {"n", n},
        {"a", to_string(e.a(n))},
        {"deg", e.a(n).deg()},
        {"lambda", e.lambda(n).to_string()},
        {"mu", e.mu(n).to_string()},
        {"certified", e.is_certified(n)},
    });
  }
  return arr.dump(2) + "\n";
}

std::string expansion_csv(const CFExpansion& e) {
  std::ostringstream os;
  os << "n,deg,lambda,certified\n";
  for (std::size_t n = 1; n <= e.size(); ++n) {
    os << n << ',' << e.a(n).deg() << ',' << e.lambda(n) << ',' << (e.is_certified(n) ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string expansion_plain(const CFExpansion& e) {
  std::ostringstream os;
  os << "# quotients=" << e.size() << " certified=" << e.certified();
  if (e.source_precision()) os << " N=" << *e.source_precision();
  if (e.terminated()) os << " terminated";
  os << '\n';
  for (std::size_t n = 1; n <= e.size(); ++n) {
    os << "a_" << n << " = " << to_string(e.a(n)) << "  [deg=" << e.a(n).deg() << " lambda=" << e.lambda(n)
       << " mu=" << e.mu(n) << (e.is_certified(n) ? "" : " uncertified") << "]\n";
  }
  return os.str();
}

std::string check_line(const CheckResult& r) {
  std::string line = (r.ok ? "OK " : "FAIL ") + r.check + " n=" + std::to_string(r.n);
  if (!r.ok) line += ": residual=" + to_string(r.residual);
  return line;
}

std::string checks_plain(std::span<const CheckResult> results) {
  std::string out;
  for (const auto& r : results) out += check_line(r) + "\n";
  return out;
}

std::string checks_json(std::span<const CheckResult> results) {
  json arr = json::array();
  for (const auto& r : results) {
    arr.push_back({{"check", r.check}, {"n", r.n}, {"ok", r.ok}, {"residual", to_string(r.residual)}});
  }
  return arr.dump(2) + "\n";
}

std::string checks_csv(std::span<const CheckResult> results) {
  std::string out = "check,n,ok,residual\n";
  for (const auto& r : results) {
    out += r.check + "," + std::to_string(r.n) + "," + (r.ok ? "true" : "false") + ",\"" + to_string(r.residual) +
           "\"\n";
  }
  return out;
}

std::string quadruple_plain(const TheoremQuadruple& q) {
  std::ostringstream os;
  for (std::size_t j = 0; j < 4; ++j) {
    os << "a_" << 4 * q.n + j + 1 << " = " << to_string(q.a[j]) << "  [lambda=" << q.lambdas[j] << "]\n";
  }
  return os.str();
}

std::string quadruple_json(const TheoremQuadruple& q) {
  json arr = json::array();
  for (std::size_t j = 0; j < 4; ++j) {
    arr.push_back({{"index", 4 * q.n + j + 1}, {"a", to_string(q.a[j])}, {"lambda", q.lambdas[j].to_string()}});
  }
  json out = {{"n", q.n}, {"quotients", arr}};
  return out.dump(2) + "\n";
}

std::string quadruple_csv(const TheoremQuadruple& q) {
  std::ostringstream os;
  os << "index,deg,lambda,a\n";
  for (std::size_t j = 0; j < 4; ++j) {
    os << 4 * q.n + j + 1 << ',' << q.a[j].deg() << ',' << q.lambdas[j] << ",\"" << to_string(q.a[j]) << "\"\n";
  }
  return os.str();
}

Rat measure_max(std::span<const MeasurePoint> points) {
  if (points.empty()) throw std::invalid_argument("measure_max: no points");
  return std::max_element(points.begin(), points.end(),
                          [](const MeasurePoint& a, const MeasurePoint& b) { return a.nu < b.nu; })
      ->nu;
}

std::string measure_plain(std::span<const MeasurePoint> points) {
  std::ostringstream os;
  for (const auto& p : points) os << "n=" << p.n << " nu=" << p.nu << " (" << fixed6(p.nu.to_double()) << ")\n";
  const Rat best = measure_max(points);
  os << "estimate=" << best << " (" << fixed6(best.to_double()) << ")\n";
  return os.str();
}

std::string measure_json(std::span<const MeasurePoint> points) {
  json arr = json::array();
  for (const auto& p : points) arr.push_back({{"n", p.n}, {"nu", p.nu.to_string()}, {"value", p.nu.to_double()}});
  const Rat best = measure_max(points);
  json out = {{"points", arr}, {"estimate", best.to_string()}, {"estimate_value", best.to_double()}};
  return out.dump(2) + "\n";
}

std::string measure_csv(std::span<const MeasurePoint> points) {
  std::ostringstream os;
  os << "n,nu,value\n";
  for (const auto& p : points) os << p.n << ',' << p.nu << ',' << fixed6(p.nu.to_double()) << '\n';
  return os.str();
}

}  // namespace cfrac::report
