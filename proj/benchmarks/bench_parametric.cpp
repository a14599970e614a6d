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
#include <vector>

#include "quaketail/quaketail.hpp"

namespace {

using namespace quaketail;

const ParametricModel kModel{TruncExp(2.24, 4.95), Gompertz(2.0, 0.0796)};

void BM_JointTail(benchmark::State& state) {
  double s = 5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(joint_tail_parametric(kModel, s, s - 1.2));
    s = s < 9.0 ? s + 0.1 : 5.0;
  }
}
BENCHMARK(BM_JointTail);

void BM_LevelCurve(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(5.0 + 0.1 * i);
  for (auto _ : state) benchmark::DoNotOptimize(level_curve_parametric(kModel, 1e-3, grid));
}
BENCHMARK(BM_LevelCurve)->Unit(benchmark::kMillisecond);

void BM_FitCensoredGompertz(benchmark::State& state) {
  const auto law = AftershockLaw::from_gompertz(2.0, 0.0796);
  RngStream rng(1, 4);
  const auto pairs =
      simulate_pairs(law, kModel.margin_x, static_cast<std::size_t>(state.range(0)), 4.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(fit_censored_gompertz(pairs));
}
BENCHMARK(BM_FitCensoredGompertz)->Arg(180)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
