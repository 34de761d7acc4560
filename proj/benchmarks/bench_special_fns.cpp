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

#include "projstat/special_fns.hpp"

namespace {

namespace special = projstat::special;

void BM_LogGamma(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::log_gamma(x));
    x = x > 100 ? 0.5 : x + 0.37;
  }
}
BENCHMARK(BM_LogGamma);

void BM_EllipticK(benchmark::State& state) {
  double k = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::elliptic_k(k));
    k = k > 0.99 ? 0.0 : k + 1e-3;
  }
}
BENCHMARK(BM_EllipticK);

void BM_IMk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(special::i_mk(4.5, 1.5, 0.3, 0.6));
}
BENCHMARK(BM_IMk);

void BM_IMkGeneralized(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::i_mk_generalized(2.5, 2, {1, 0.25}, 0.1, {1.5, 0}, 0.7));
  }
}
BENCHMARK(BM_IMkGeneralized);

}  // namespace
