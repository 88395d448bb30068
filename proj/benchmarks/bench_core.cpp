// SPDX-License-Identifier: Apache-2.0
//
// beamnet: beampattern statistics of random collaborative sensor arrays
// Copyright (C) 2026 The beamnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "beamnet/beamnet.hpp"

using namespace beamnet;

namespace
{

void BM_BesselJ1(benchmark::State &state)
{
  double x = 0.1;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(specfun::bessel_j1(x));
    x = x < 40.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_BesselJ1);

void BM_MarcumQ1(benchmark::State &state)
{
  const double a = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::marcum_q1(a, a + 1.0));
}
BENCHMARK(BM_MarcumQ1)->Arg(1)->Arg(10)->Arg(30);

void BM_PatternPower(benchmark::State &state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto nodes = to_cartesian(sample_realization({n, 8.0, 1}, 0));
  double phi = 0.0;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(pattern_power(nodes, phi, 8.0));
    phi += 1e-3;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_PatternPower)->Arg(16)->Arg(256)->Arg(1024);

void BM_DirectivityRealization(benchmark::State &state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto nodes = sample_realization({n, 16.0, 1}, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(directivity_realization(nodes, 16.0));
}
BENCHMARK(BM_DirectivityRealization)->Arg(16)->Arg(256)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_DirectivityLower(benchmark::State &state)
{
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(directivity_lower(256, r));
}
BENCHMARK(BM_DirectivityLower)->Arg(2)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_ExactCcdf(benchmark::State &state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const double a = alpha(std::numbers::pi / 4.0, 2.0);
  const auto thr = uniform_grid(64, 0.01 / static_cast<double>(n), 10.0 / static_cast<double>(n));
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_ccdf(n, a, thr));
}
BENCHMARK(BM_ExactCcdf)->Arg(16)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_RegionPeak(benchmark::State &state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const double r = static_cast<double>(n) / 2.0;
  const auto region = sidelobe_region(n, r);
  const auto nodes = to_cartesian(sample_realization({n, r, 1}, 0));
  for (auto _ : state)
    benchmark::DoNotOptimize(region_peak(nodes, region));
}
BENCHMARK(BM_RegionPeak)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_MonteCarloMeanPattern(benchmark::State &state)
{
  const auto grid = uniform_grid(64, 0.0, std::numbers::pi);
  for (auto _ : state)
    benchmark::DoNotOptimize(mc_mean_pattern({16, 2.0, 1}, grid, 1000));
}
BENCHMARK(BM_MonteCarloMeanPattern)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
