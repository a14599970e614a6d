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

#include "quaketail/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quaketail/error.hpp"

namespace quaketail {

namespace {

constexpr std::size_t kDayTable = 4096;

double round_to_grid(double m) { return std::round(m * 10.0) / 10.0; }

}  // namespace

OmoriSeries omori_series(double c, double p) {
  if (!(p > 1.0)) throw DomainError("Omori exponent p must exceed 1 for a finite series");
  if (!(c > -1.0)) throw DomainError("Omori offset c must exceed -1");
  const double start = std::max(100.0, 10.0 * p);
  const auto cutoff = static_cast<std::int64_t>(std::max(1.0, std::ceil(start - c)));
  double sum = 0.0;
  for (std::int64_t t = cutoff - 1; t >= 1; --t) sum += std::pow(static_cast<double>(t) + c, -p);
  // sum_{t>=T} f(t) = int_T^inf f + f(T)/2 - f'(T)/12 + f'''(T)/720 - f^(5)(T)/30240
  const double u = static_cast<double>(cutoff) + c;
  const double f = std::pow(u, -p);
  const double d1 = -p * f / u;
  const double d3 = -p * (p + 1) * (p + 2) * f / (u * u * u);
  const double d5 = -p * (p + 1) * (p + 2) * (p + 3) * (p + 4) * f / (u * u * u * u * u);
  sum += u * f / (p - 1.0) + 0.5 * f - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0;
  return {sum, cutoff};
}

AftershockLaw::AftershockLaw(double a, double b, double c, double p)
    : a_(a), b_(b), c_(c), p_(p), series_{} {
  if (!(b > 0.0)) throw DomainError("Gutenberg-Richter b must be positive");
  if (!std::isfinite(a)) throw DomainError("Gutenberg-Richter a must be finite");
  series_ = omori_series(c, p);
}

AftershockLaw AftershockLaw::from_gompertz(double beta, double gompertz_c, double c, double p) {
  if (!(beta > 0.0) || !(gompertz_c > 0.0)) throw DomainError("Gompertz parameters must be positive");
  const double sum = omori_series(c, p).sum;
  return AftershockLaw(std::log10(gompertz_c * beta / sum), beta / std::numbers::ln10, c, p);
}

double AftershockLaw::beta() const noexcept { return b_ * std::numbers::ln10; }

double AftershockLaw::gompertz_c() const noexcept {
  return std::pow(10.0, a_) * series_.sum / beta();
}

double intensity(const AftershockLaw& law, double t, double m, double m0) {
  if (m > m0) return 0.0;
  return std::pow(10.0, law.a() + law.b() * (m0 - m)) / std::pow(t + law.c(), law.p());
}

double expected_count(const AftershockLaw& law, double m0) {
  if (m0 <= 0.0) return 0.0;
  return law.gompertz_c() * std::expm1(law.beta() * m0);
}

double conditional_magnitude_sf(const AftershockLaw& law, double m, double m0) {
  if (!(m >= 0.0 && m <= m0)) throw DomainError("aftershock magnitude must lie in [0, m0]");
  const double beta = law.beta();
  return (std::exp(-beta * m) - std::exp(-beta * m0)) / -std::expm1(-beta * m0);
}

AftershockSimulator::AftershockSimulator(const AftershockLaw& law) : law_(law) {
  cumulative_.resize(kDayTable);
  double acc = 0.0;
  for (std::size_t t = 1; t <= kDayTable; ++t) {
    acc += std::pow(static_cast<double>(t) + law_.c(), -law_.p());
    cumulative_[t - 1] = acc;
  }
}

double AftershockSimulator::sample_day(RngStream& rng) const {
  const double total = law_.series().sum;
  const double u = rng.uniform() * total;
  if (u < cumulative_.back()) {
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<double>(it - cumulative_.begin()) + 1.0;
  }
  // Days beyond the table: propose v with density prop. to (v + c)^-p on
  // [table, inf), take t = ceil(v), accept with pmf(t) / int_{t-1}^t.
  const double c = law_.c(), p = law_.p();
  const double base = static_cast<double>(kDayTable) + c;
  for (;;) {
    const double v = base * std::pow(rng.uniform(), -1.0 / (p - 1.0)) - c;
    const double t = std::max(std::ceil(v), static_cast<double>(kDayTable) + 1.0);
    const double mass = (std::pow(t - 1.0 + c, 1.0 - p) - std::pow(t + c, 1.0 - p)) / (p - 1.0);
    if (rng.uniform() * mass <= std::pow(t + c, -p)) return t;
  }
}

double AftershockSimulator::sample_magnitude(double m0, RngStream& rng) const {
  const double beta = law_.beta();
  const double floor_sf = std::exp(-beta * m0);
  return -std::log(floor_sf + rng.uniform() * -std::expm1(-beta * m0)) / beta;
}

SimulatedEvent AftershockSimulator::simulate_event(double m0, RngStream& rng) const {
  SimulatedEvent ev;
  ev.m0 = m0;
  const auto n = rng.poisson(expected_count(law_, m0));
  ev.aftershocks.reserve(n);
  double largest = -1.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    SimulatedAftershock a;
    a.magnitude = sample_magnitude(m0, rng);
    a.day = sample_day(rng);
    largest = std::max(largest, a.magnitude);
    ev.aftershocks.push_back(a);
  }
  if (n > 0) ev.largest = largest;
  return ev;
}

std::optional<double> AftershockSimulator::simulate_largest(double m0, RngStream& rng) const {
  const auto n = rng.poisson(expected_count(law_, m0));
  if (n == 0) return std::nullopt;
  const double beta = law_.beta();
  // sf of the maximum's magnitude level: 1 - u^(1/N)
  const double sf = -std::expm1(std::log(rng.uniform()) / static_cast<double>(n));
  const double m = -std::log(std::exp(-beta * m0) + sf * -std::expm1(-beta * m0)) / beta;
  return std::clamp(m, 0.0, m0);
}

SimulatedEvent simulate_event(const AftershockLaw& law, double m0, RngStream& rng) {
  return AftershockSimulator(law).simulate_event(m0, rng);
}

CensoredPairs simulate_pairs(const AftershockLaw& law, const TruncExp& margin_x, std::size_t n,
                             double censor_threshold, RngStream& rng,
                             const SimulatePairsOptions& opts) {
  const AftershockSimulator sim(law);
  std::vector<CensoredPair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = margin_x.sample(rng);
    std::optional<double> y = sim.simulate_largest(x, rng);
    if (opts.round_to_grid) {
      x = round_to_grid(x);
      if (y) y = round_to_grid(*y);
    }
    if (y && *y < censor_threshold - 1e-9) y.reset();
    pairs.push_back({x, y});
  }
  return CensoredPairs(std::move(pairs), censor_threshold);
}

Catalog pairs_to_catalog(const CensoredPairs& pairs) {
  constexpr std::size_t kCells = 32;
  constexpr double kCellDeg = 2.5;
  constexpr double kSlotDays = 1000.0;
  std::vector<ShockRecord> shocks;
  std::int64_t id = 0;
  for (std::size_t i = 0; i < pairs.n(); ++i) {
    const std::size_t cell = i % (kCells * kCells);
    const double slot = static_cast<double>(i / (kCells * kCells));
    ShockRecord main;
    main.id = ++id;
    main.time = slot * kSlotDays;
    main.latitude = -40.0 + kCellDeg * static_cast<double>(cell / kCells);
    main.longitude = -80.0 + kCellDeg * static_cast<double>(cell % kCells);
    main.magnitude = pairs.pairs()[i].x;
    shocks.push_back(main);
    if (const auto& y = pairs.pairs()[i].y) {
      ShockRecord after = main;
      after.id = ++id;
      after.time += 1.0;
      after.magnitude = *y;
      shocks.push_back(after);
    }
  }
  return Catalog(std::move(shocks));
}

}  // namespace quaketail
