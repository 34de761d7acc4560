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

#include "projstat/analytic.hpp"

namespace {

using projstat::EnsembleKind;
namespace analytic = projstat::analytic;

void BM_ResidueUnitary62(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic::twopoint_residue(EnsembleKind::kUnitary, 6, 2, 0.3, 0.4));
  }
}
BENCHMARK(BM_ResidueUnitary62);

void BM_ResidueOrthogonal123(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analytic::twopoint_residue(EnsembleKind::kOrthogonal, 12, 3, 0.3, 0.4));
  }
}
BENCHMARK(BM_ResidueOrthogonal123);

void BM_Quadrature(benchmark::State& state) {
  const auto ens = state.range(0) ? EnsembleKind::kUnitary : EnsembleKind::kOrthogonal;
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic::twopoint_quadrature(ens, 12, 4, 0.3, 0.4));
  }
}
BENCHMARK(BM_Quadrature)->Arg(0)->Arg(1);

void BM_ClosedFormP42(benchmark::State& state) {
  double t2 = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic::closed_form_P42(0.35, t2));
    t2 = t2 > 0.9 ? 0.1 : t2 + 1e-3;
  }
}
BENCHMARK(BM_ClosedFormP42);

void BM_DensityGrid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> axis(n);
  for (std::size_t i = 0; i < n; ++i) axis[i] = (i + 0.5) / static_cast<double>(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic::density_grid(EnsembleKind::kUnitary, 6, 2, axis, axis));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}
BENCHMARK(BM_DensityGrid)->Arg(25)->Arg(50);

}  // namespace
