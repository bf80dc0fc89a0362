// Copyright 2026 The apnkit Authors.
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

#include <random>

#include "apnkit/constructions.hpp"
#include "apnkit/invariants.hpp"
#include "apnkit/vbf.hpp"

namespace {

using namespace apnkit;

void BM_FieldMul(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<FieldElement> xs(1024);
  for (auto& x : xs) x = FieldElement(static_cast<std::uint32_t>(rng() & ctx.group_order()));
  FieldElement acc = ctx.one();
  for (auto _ : state) {
    for (FieldElement x : xs) acc = ctx.mul(acc, x) + ctx.one();
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

void BM_IsApn(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const FieldCtx ctx = FieldCtx::create(m);
  const Vbf f = pott_zhou(ctx, pott_zhou_params(ctx, 1, 0));
  for (auto _ : state) benchmark::DoNotOptimize(is_apn(f));
}
BENCHMARK(BM_IsApn)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GammaRank(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(static_cast<unsigned>(state.range(0)));
  const Vbf f = gold(ctx, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_rank(f));
}
BENCHMARK(BM_GammaRank)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AutL(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(static_cast<unsigned>(state.range(0)));
  const Vbf f = pott_zhou(ctx, pott_zhou_params(ctx, 1, 2 % ctx.degree()));
  for (auto _ : state) benchmark::DoNotOptimize(aut_l_order(f));
}
BENCHMARK(BM_AutL)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GraphAut(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(static_cast<unsigned>(state.range(0)));
  const Vbf f = gold(ctx, 1);
  for (auto _ : state) benchmark::DoNotOptimize(graph_aut_order(f));
}
BENCHMARK(BM_GraphAut)->Arg(4)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
