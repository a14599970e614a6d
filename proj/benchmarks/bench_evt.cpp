// Copyright 2026 The quaketail Authors.
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

#include <cmath>
#include <optional>
#include <vector>

#include "quaketail/quaketail.hpp"

namespace {

using namespace quaketail;

CensoredPairs grid_pairs(std::size_t n) {
  RngStream rng(1, 4);
  const TruncExp mx(2.24, 4.95);
  std::vector<CensoredPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::round(mx.sample(rng) * 10.0) / 10.0;
    const double y = std::round((x - 1.5 * rng.uniform()) * 10.0) / 10.0;
    out.push_back({x, y >= 4.0 ? std::optional<double>(y) : std::nullopt});
  }
  return CensoredPairs(std::move(out), 4.0);
}

void BM_RankWithTies(benchmark::State& state) {
  const auto pairs = grid_pairs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    RngStream ties(1, 2);
    benchmark::DoNotOptimize(rank_with_random_ties(pairs, ties));
  }
}
BENCHMARK(BM_RankWithTies)->Arg(180)->Arg(2000)->Arg(20000);

void BM_RHat(benchmark::State& state) {
  RngStream ties(1, 2);
  const auto rs = rank_with_random_ties(grid_pairs(static_cast<std::size_t>(state.range(0))), ties);
  for (auto _ : state) benchmark::DoNotOptimize(r_hat(rs, 1.0, 40));
}
BENCHMARK(BM_RHat)->Arg(180)->Arg(2000)->Arg(20000);

void BM_RHatSmoothed(benchmark::State& state) {
  RngStream ties(1, 2);
  const auto rs = rank_with_random_ties(grid_pairs(static_cast<std::size_t>(state.range(0))), ties);
  const SmoothedTailDependence r(rs, 40);
  for (auto _ : state) benchmark::DoNotOptimize(r(1.0));
}
BENCHMARK(BM_RHatSmoothed)->Arg(180)->Arg(2000)->Arg(20000);

void BM_KDiagnostic(benchmark::State& state) {
  RngStream ties(1, 2);
  const auto rs = rank_with_random_ties(grid_pairs(2000), ties);
  const std::vector<double> xs = {0.5, 1.0, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(k_diagnostic(rs, xs, 1, 150));
}
BENCHMARK(BM_KDiagnostic);

}  // namespace
