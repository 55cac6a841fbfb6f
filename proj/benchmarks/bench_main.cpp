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

#include <benchmark/benchmark.h>

#include "cfrac/cf_engine.hpp"
#include "cfrac/theorem_forms.hpp"
#include "cfrac/word.hpp"

using namespace cfrac;

static void BM_ExpandTheta(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto series = TruncatedSeries::from_source(theta_source(), n);
  for (auto _ : state) {
    auto e = expand(series, 30);
    benchmark::DoNotOptimize(e.certified());
  }
}
BENCHMARK(BM_ExpandTheta)->RangeMultiplier(2)->Range(64, 2048)->Unit(benchmark::kMillisecond);

static void BM_CertifyDepth(benchmark::State& state) {
  const auto terms = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto e = certify_by_doubling(theta_source(), terms, 64);
    benchmark::DoNotOptimize(e.size());
  }
}
BENCHMARK(BM_CertifyDepth)->Arg(12)->Arg(20)->Arg(28)->Unit(benchmark::kMillisecond);

static void BM_PolyMulDense(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<Rat> c(d + 1);
  for (std::size_t i = 0; i <= d; ++i) c[i] = Rat(static_cast<long>(i % 7) + 1, static_cast<long>(i % 5) + 1);
  const Poly p(c);
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyMulDense)->RangeMultiplier(4)->Range(16, 1024);

static void BM_PolyDivRem(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<Rat> c(2 * d + 1), q(d + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(static_cast<long>(i % 9) - 4);
  for (std::size_t i = 0; i <= d; ++i) q[i] = Rat(static_cast<long>(i % 3) + 1);
  const Poly a(c), b(q);
  for (auto _ : state) benchmark::DoNotOptimize(divrem(a, b));
}
BENCHMARK(BM_PolyDivRem)->RangeMultiplier(4)->Range(16, 1024);

static void BM_WordPrefix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(word_prefix(n));
}
BENCHMARK(BM_WordPrefix)->Range(1 << 10, 1 << 20);

static void BM_ClosedFormQuadruple(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ClosedForms forms;
    benchmark::DoNotOptimize(forms.quadruple(n));
  }
}
BENCHMARK(BM_ClosedFormQuadruple)->DenseRange(2, 10, 4);

BENCHMARK_MAIN();
