// Copyright 2026 The rankindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "rankindep/rankindep.hpp"

namespace {

using namespace rankindep;

Permutation random_permutation(std::size_t n) {
  std::mt19937_64 rng(n);
  return Permutation::random(n, rng);
}

void BM_SumArrayUpdateQuery(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Permutation p = random_permutation(n);
  for (auto _ : state) {
    SumArray a(n);
    std::int64_t sink = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      sink += a.prefix_sum(p(i));
      a.add(p(i), 1);
    }
    benchmark::DoNotOptimize(sink);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SumArrayUpdateQuery)->RangeMultiplier(10)->Range(1'000, 1'000'000);

void BM_HoeffdingD(benchmark::State& state) {
  const Permutation p = random_permutation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hoeffding_d(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HoeffdingD)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Unit(benchmark::kMillisecond);

void BM_Quad(benchmark::State& state) {
  const Permutation p = random_permutation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quad(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Quad)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Unit(benchmark::kMillisecond);

void BM_TauStar(benchmark::State& state) {
  const Permutation p = random_permutation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tau_star(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TauStar)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
