// Copyright 2026 The gsys Authors.
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

#include <vector>

#include "gsys/cobongartz.hpp"
#include "gsys/explorer.hpp"
#include "gsys/gsystem.hpp"
#include "gsys/laurent.hpp"
#include "gsys/laurent_seed.hpp"
#include "gsys/matrix_seed.hpp"
#include "gsys/surface.hpp"

namespace {

using gsys::ExchangeMatrix;
using gsys::IntMatrix;
using gsys::LaurentPoly;
using gsys::MutationSequence;

ExchangeMatrix a3() { return ExchangeMatrix(IntMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}); }

// Acyclic orientation of A_n.
ExchangeMatrix linear_a(std::size_t n) {
  IntMatrix b(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b(i, i + 1) = 1;
    b(i + 1, i) = -1;
  }
  return ExchangeMatrix(b);
}

MutationSequence cyclic_sequence(std::size_t n, std::size_t length) {
  MutationSequence seq;
  for (std::size_t i = 0; i < length; ++i) seq.push_back(i % n);
  return seq;
}

void BM_MatrixSeedTrace(benchmark::State& state) {
  const ExchangeMatrix b0 = linear_a(5);
  const MutationSequence seq = cyclic_sequence(5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gsys::seed_at(b0, seq));
}
BENCHMARK(BM_MatrixSeedTrace)->Arg(8)->Arg(32)->Arg(128);

void BM_ClusterAt(benchmark::State& state) {
  const MutationSequence seq = cyclic_sequence(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gsys::cluster_at(a3(), seq));
}
BENCHMARK(BM_ClusterAt)->Arg(4)->Arg(8);

void BM_LaurentExactDivide(benchmark::State& state) {
  const std::size_t n = 3;
  const LaurentPoly x = LaurentPoly::variable(n, 0);
  const LaurentPoly y = LaurentPoly::variable(n, 1);
  const LaurentPoly z = LaurentPoly::variable(n, 2);
  LaurentPoly den = x + y + z;
  LaurentPoly q = x * y + z + LaurentPoly::constant(n, 1);
  for (int i = 1; i < state.range(0); ++i) q = q * (x + z);
  const LaurentPoly num = q * den;
  for (auto _ : state) benchmark::DoNotOptimize(gsys::lp_exact_divide(num, den));
}
BENCHMARK(BM_LaurentExactDivide)->Arg(1)->Arg(4)->Arg(8);

void BM_Complete(benchmark::State& state) {
  const MutationSequence seq{1, 2, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(gsys::complete({a3(), seq, {2}}, true));
}
BENCHMARK(BM_Complete);

void BM_Enumerate(benchmark::State& state) {
  const ExchangeMatrix b0 = linear_a(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gsys::enumerate(b0));
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerifyGSystem(benchmark::State& state) {
  const gsys::GCollection coll = gsys::to_gcollection(gsys::enumerate(a3()));
  for (auto _ : state) benchmark::DoNotOptimize(gsys::verify_gsystem(coll));
}
BENCHMARK(BM_VerifyGSystem)->Unit(benchmark::kMillisecond);

void BM_EnumerateTriangulations(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gsys::enumerate_triangulations(m));
}
BENCHMARK(BM_EnumerateTriangulations)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SurfaceCompletion(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto all = gsys::enumerate_triangulations(m);
  const auto diagonals = gsys::Polygon(m).diagonals();
  for (auto _ : state) {
    for (const auto& t : all) {
      for (const auto& beta : diagonals) {
        benchmark::DoNotOptimize(gsys::elementary_cobongartz_tri(beta, t));
      }
    }
  }
}
BENCHMARK(BM_SurfaceCompletion)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ArcGVectors(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto all = gsys::enumerate_triangulations(m);
  for (auto _ : state) benchmark::DoNotOptimize(gsys::surface_g_matrix(all.front(), all.back()));
}
BENCHMARK(BM_ArcGVectors)->Arg(6)->Arg(9)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
