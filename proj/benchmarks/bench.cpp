// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include <benchmark/benchmark.h>

#include "zgdof/achievability.hpp"
#include "zgdof/montecarlo.hpp"
#include "zgdof/rank_oracle.hpp"
#include "zgdof/regions.hpp"

namespace {

using namespace zgdof;

void BM_DelayedRegion(benchmark::State& state) {
  const AntennaConfig cfg(2, 2, 3, 2);
  const Alpha alpha(Rat(2, 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(delayed_region(cfg, alpha));
  }
}
BENCHMARK(BM_DelayedRegion);

void BM_VerifyInnerEqualsOuter(benchmark::State& state) {
  const AntennaConfig cfg(2, 4, 3, 3);
  const Alpha alpha(Rat(7, 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_inner_equals_outer(cfg, alpha));
  }
}
BENCHMARK(BM_VerifyInnerEqualsOuter);

void BM_RankSweep(benchmark::State& state) {
  const AntennaConfig cfg(4, 8, 5, 5);
  const Alpha alpha(Rat(9, 8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(argmax_weighted_bound(cfg, alpha));
  }
}
BENCHMARK(BM_RankSweep);

void BM_SumSweep(benchmark::State& state) {
  const AntennaConfig cfg(3, 5, 4, 4);
  for (auto _ : state) {
    Rat acc(0);
    for (int k = 0; k <= 30; ++k) acc += sum_gdof(cfg, Alpha(Rat(k, 10)));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_SumSweep);

void BM_LogDet(benchmark::State& state) {
  const ChannelSampler sampler(AntennaConfig(2, 2, 3, 2), 99);
  const ChannelSample s = sampler.sample(0, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(logdet_bits(s.h12, s.h11, 1.4, 1.0, 40.0));
  }
}
BENCHMARK(BM_LogDet);

}  // namespace

BENCHMARK_MAIN();
