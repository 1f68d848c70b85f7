/*
   Copyright 2026 The rookoid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>

#include <benchmark/benchmark.h>

#include "rookoid/wa_decomposition.hpp"

namespace {

  void BM_Enumerate(benchmark::State& state) {
    auto const n = static_cast<std::uint32_t>(state.range(0));
    auto const r = static_cast<std::uint32_t>(state.range(1));
    std::size_t count = 0;
    for (auto _ : state) {
      rookoid::RookEnumeration it(n, r);
      count = 0;
      while (it.next()) {
        ++count;
      }
      benchmark::DoNotOptimize(count);
    }
    state.counters["matrices"] = static_cast<double>(count);
  }
  BENCHMARK(BM_Enumerate)->Args({3, 2})->Args({4, 2})->Args({5, 2});

  void BM_CycMul(benchmark::State& state) {
    auto const m = static_cast<std::uint32_t>(state.range(0));
    std::vector<mpq_class> ca, cb;
    for (std::uint32_t j = 0; j < rookoid::euler_phi(m); ++j) {
      ca.emplace_back(static_cast<long>(j * j % 7) - 3, 3);
      cb.emplace_back(static_cast<long>(j % 5) + 1, 2);
    }
    auto const a = rookoid::CycNum::from_powers(m, ca);
    auto const b = rookoid::CycNum::from_powers(m, cb);
    for (auto _ : state) {
      benchmark::DoNotOptimize(a * b);
    }
  }
  BENCHMARK(BM_CycMul)->Arg(4)->Arg(12)->Arg(60);

  void BM_StarProduct(benchmark::State& state) {
    auto const      basis = rookoid::enumerate(3, 2);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::normal_distribution<double>           gauss;
    auto random = [&] {
      rookoid::ComplexElement x(3, 2);
      for (int i = 0; i < state.range(0); ++i) {
        x.add_term(basis[pick(rng)], {gauss(rng), gauss(rng)});
      }
      return x;
    };
    auto const p = random();
    auto const q = random();
    for (auto _ : state) {
      benchmark::DoNotOptimize(rookoid::star(p, q));
    }
  }
  BENCHMARK(BM_StarProduct)->Arg(8)->Arg(64);

  void BM_Csomi(benchmark::State& state) {
    auto const t = rookoid::wreath_table(static_cast<std::uint32_t>(state.range(0)),
                                         static_cast<std::uint32_t>(state.range(1)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(rookoid::csomi(t, 42));
    }
  }
  BENCHMARK(BM_Csomi)->Args({2, 2})->Args({2, 3})->Args({1, 4})->Unit(benchmark::kMillisecond);

  void BM_Decompose(benchmark::State& state) {
    auto const n = static_cast<std::uint32_t>(state.range(0));
    auto const r = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) {
      benchmark::DoNotOptimize(rookoid::decompose(n, r, 42));
    }
  }
  BENCHMARK(BM_Decompose)->Args({2, 1})->Args({3, 2})->Args({4, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
