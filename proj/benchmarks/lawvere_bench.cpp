//  Copyright 2026 The Lawvere Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


#include <benchmark/benchmark.h>

#include "lawvere/approach.hpp"
#include "lawvere/colimit.hpp"
#include "lawvere/generate.hpp"
#include "lawvere/ultra.hpp"

namespace lawvere {
namespace {

const ValueQuantale kChain3 = ValueQuantale::chain(Rational(1), 3);

void BM_EnumerateMetrics(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_metrics(kChain3, n));
}
BENCHMARK(BM_EnumerateMetrics)->Arg(2)->Arg(3);

void BM_IsCocomplete(benchmark::State& state) {
  Rng rng(1);
  const MetricSpace m = random_metric(kChain3, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_cocomplete(m));
}
BENCHMARK(BM_IsCocomplete)->Arg(3)->Arg(6)->Arg(10);

void BM_WeightedSupAllWeights(benchmark::State& state) {
  Rng rng(2);
  const MetricSpace m = random_metric(kChain3, static_cast<std::size_t>(state.range(0)), rng);
  const std::vector<WeightTable> weights = enumerate_weights(m, Variance::Contra);
  for (auto _ : state)
    for (const WeightTable& psi : weights) benchmark::DoNotOptimize(weighted_sup(m, psi));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(weights.size()));
}
BENCHMARK(BM_WeightedSupAllWeights)->Arg(2)->Arg(3)->Arg(4);

void BM_IsbellAdjunction(benchmark::State& state) {
  Rng rng(3);
  const MetricSpace m = random_metric(kChain3, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(isbell_adjunction_check(m));
}
BENCHMARK(BM_IsbellAdjunction)->Arg(2)->Arg(3);

void BM_RationalWeightedSup(benchmark::State& state) {
  Rng rng(4);
  const MetricSpace m =
      random_metric(ValueQuantale::extended_rational(), static_cast<std::size_t>(state.range(0)), rng);
  const WeightTable psi = random_weight(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_sup(m, psi));
}
BENCHMARK(BM_RationalWeightedSup)->Arg(4)->Arg(16)->Arg(32);

void BM_LiftMetric(benchmark::State& state) {
  Rng rng(5);
  const MetricSpace m = random_metric(kChain3, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(lift_metric(m));
}
BENCHMARK(BM_LiftMetric)->Arg(3)->Arg(6);

void BM_DistToConv(benchmark::State& state) {
  Rng rng(6);
  const ApproachSpace s = random_dist_space(kChain3, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dist_to_conv(s));
}
BENCHMARK(BM_DistToConv)->Arg(3)->Arg(6)->Arg(8);

void BM_MainClauses(benchmark::State& state) {
  Rng rng(7);
  const ApproachSpace s = random_dist_space(kChain3, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(main_theorem_clauses(s));
}
BENCHMARK(BM_MainClauses)->Arg(2)->Arg(3);

}  // namespace
}  // namespace lawvere

BENCHMARK_MAIN();
