// Copyright 2026 The rrseq Authors
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

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "rrseq/poly.hpp"
#include "rrseq/root_count.hpp"
#include "rrseq/rr_engine.hpp"
#include "rrseq/seq_catalog.hpp"

namespace {

using namespace rrseq;

// Deterministic random polynomial of the given degree, |coeff| <= 50,
// nonzero leading coefficient.
Poly random_poly(int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-50, 50);
  std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
  for (Int& x : c) x = coef(rng);
  while (c.back() == 0) c.back() = coef(rng);
  return Poly(std::move(c));
}

void BM_NumRealRoots(benchmark::State& state) {
  std::mt19937_64 rng(7u);
  std::vector<Poly> polys;
  for (int i = 0; i < 16; ++i)
    polys.push_back(random_poly(static_cast<int>(state.range(0)), rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(num_real_roots(polys[i % polys.size()]));
    ++i;
  }
}
BENCHMARK(BM_NumRealRoots)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SturmCount(benchmark::State& state) {
  std::mt19937_64 rng(7u);
  std::vector<Poly> polys;
  for (int i = 0; i < 16; ++i)
    polys.push_back(random_poly(static_cast<int>(state.range(0)), rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sturm_count(polys[i % polys.size()], std::nullopt, std::nullopt));
    ++i;
  }
}
BENCHMARK(BM_SturmCount)->Arg(8)->Arg(16)->Arg(32);

void BM_RrTransformFactorial(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  const auto terms = generate(SeqSpec::simple(SeqFamily::factorial), n_max);
  for (auto _ : state)
    benchmark::DoNotOptimize(rr_transform(terms, n_max, 1));
}
BENCHMARK(BM_RrTransformFactorial)
    ->Arg(40)
    ->Arg(80)
    ->Unit(benchmark::kMillisecond);

void BM_RrTransformPower50(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  const auto terms = generate(SeqSpec::with_k(SeqFamily::power, 50), n_max);
  for (auto _ : state)
    benchmark::DoNotOptimize(rr_transform(terms, n_max, 1));
}
BENCHMARK(BM_RrTransformPower50)
    ->Arg(40)
    ->Arg(80)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
