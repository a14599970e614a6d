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

#include "quaketail/quaketail.hpp"

namespace {

using namespace quaketail;

void BM_Decluster(benchmark::State& state) {
  const auto law = AftershockLaw::from_gompertz(2.0, 0.0796);
  RngStream rng(1, 4);
  const auto pairs = simulate_pairs(law, TruncExp(2.24, 4.95),
                                    static_cast<std::size_t>(state.range(0)), 4.0, rng);
  const auto catalog = pairs_to_catalog(pairs);
  const auto table = WindowTable::gardner_knopoff();
  for (auto _ : state) benchmark::DoNotOptimize(decluster(catalog, table));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(catalog.size()));
}
BENCHMARK(BM_Decluster)->Arg(180)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Haversine(benchmark::State& state) {
  double lat = 40.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(haversine_km(lat, 29.0, 40.7, 30.1));
    lat = lat < 41.0 ? lat + 1e-3 : 40.0;
  }
}
BENCHMARK(BM_Haversine);

}  // namespace
