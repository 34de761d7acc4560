// Copyright 2026 The projstat Authors.
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

#include "projstat/montecarlo.hpp"
#include "projstat/sampling.hpp"

namespace {

using projstat::EnsembleKind;
namespace sampling = projstat::sampling;

void BM_SampleHaar(benchmark::State& state) {
  const auto ens = state.range(1) ? EnsembleKind::kUnitary : EnsembleKind::kOrthogonal;
  const int n = static_cast<int>(state.range(0));
  projstat::Rng rng = projstat::make_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sampling::sample_haar(ens, n, rng));
}
BENCHMARK(BM_SampleHaar)->ArgsProduct({{4, 12, 64}, {0, 1}});

void BM_SampleColumns(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  projstat::Rng rng = projstat::make_stream(2, 0);
  for (auto _ : state) {
    const auto f = sampling::sample_haar_columns(EnsembleKind::kUnitary, n, 2, rng);
    benchmark::DoNotOptimize(sampling::projection_probs(f, n / 2, 2));
  }
}
BENCHMARK(BM_SampleColumns)->Arg(4)->Arg(12)->Arg(64);

void BM_EstimateJoint(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(projstat::montecarlo::estimate_joint(
        EnsembleKind::kUnitary, 4, 2, 2, 100000, 3, {50, 1, false}));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_EstimateJoint)->Unit(benchmark::kMillisecond);

}  // namespace
