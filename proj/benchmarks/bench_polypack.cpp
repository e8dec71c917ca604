// Copyright 2026 The polypack authors.
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

#include <numbers>

#include "polypack/gauge.hpp"
#include "polypack/packing.hpp"
#include "polypack/rng.hpp"
#include "polypack/slice.hpp"
#include "polypack/sweeps.hpp"

namespace {

using namespace polypack;

void BM_ParallelDimension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(7);
  const auto [f, g] = random_disjoint_flat_pair(n, 2, n - 1, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel_dimension(f, g));
}
BENCHMARK(BM_ParallelDimension)->Arg(2)->Arg(4)->Arg(6);

void BM_FlatDistance(benchmark::State& state) {
  CounterRng rng(7);
  const auto [f, g] = random_disjoint_flat_pair(4, 2, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(flat_distance(f, g));
}
BENCHMARK(BM_FlatDistance);

void BM_RadialQuadratureF1(benchmark::State& state) {
  const RadialGauge f1 = RadialGauge::modified_f1();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(radial_integral_quadrature(f1, k));
}
BENCHMARK(BM_RadialQuadratureF1)->Arg(2)->Arg(6);

void BM_GaugeSum(benchmark::State& state) {
  const RadialGauge f1 = RadialGauge::modified_f1();
  CounterRng rng(3);
  IsometryConfig config;
  for (int c = 0; c < 8; ++c)
    config.centers.push_back(4.0 * rng.gaussian_vector(3));
  const Vec x = rng.gaussian_vector(3);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_sum(f1, config, x));
}
BENCHMARK(BM_GaugeSum);

void BM_BuildSliceHexagonal(benchmark::State& state) {
  const auto packing = hexagonal_packing(static_cast<int>(state.range(0)));
  const Vec x = Vec::Zero(packing.ambient_dim());
  for (auto _ : state)
    benchmark::DoNotOptimize(build_slice(packing, 0, x, 8.0));
}
BENCHMARK(BM_BuildSliceHexagonal)->Arg(0)->Arg(1)->Arg(2);

void BM_SliceArea(benchmark::State& state) {
  const auto packing = hexagonal_packing(1);
  const DirichletSlice slice = build_slice(packing, 0, Vec::Zero(3), 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(slice_area(slice));
}
BENCHMARK(BM_SliceArea);

void BM_DensitySample(benchmark::State& state) {
  const auto packing = hexagonal_packing(1);
  const std::uint64_t samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(density_estimate(packing, 25.0, samples, 0));
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_DensitySample)->Arg(10000)->Arg(100000);

void BM_LemmaSweep(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lemma_sweep(static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_LemmaSweep)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
