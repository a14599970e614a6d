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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quaketail/catalog.hpp"
#include "quaketail/decluster.hpp"
#include "quaketail/distributions.hpp"
#include "quaketail/rng.hpp"

namespace quaketail {

// sum_{t>=1} (t + c)^-p. Terms below `cutoff_day` are added directly; the
// remainder comes from the Euler-Maclaurin expansion at the cutoff.
struct OmoriSeries {
  double sum = 0.0;
  std::int64_t cutoff_day = 0;
};

OmoriSeries omori_series(double c, double p);

// Single-generation aftershock intensity
//   lambda(t, m) = 10^(a + b (m0 - m)) / (t + c)^p,  0 <= m <= m0, t = 1, 2, ...
// Omori's K is absorbed into 10^a.
class AftershockLaw {
 public:
  // Throws DomainError unless p > 1, b > 0 and c > -1.
  AftershockLaw(double a, double b, double c, double p);

  // The law whose gap distribution is Gompertz(beta, gompertz_c) for the
  // given Omori (c, p).
  static AftershockLaw from_gompertz(double beta, double gompertz_c, double c = 1.0,
                                     double p = 2.0);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double p() const noexcept { return p_; }

  double beta() const noexcept;  // b ln 10
  const OmoriSeries& series() const noexcept { return series_; }
  // C = 10^a sum_t (t + c)^-p / beta
  double gompertz_c() const noexcept;

 private:
  double a_, b_, c_, p_;
  OmoriSeries series_;
};

// Rate per (day x magnitude unit); zero for m > m0.
double intensity(const AftershockLaw& law, double t, double m, double m0);

// E[N | m0] = C exp(beta m0) (1 - exp(-beta m0)).
double expected_count(const AftershockLaw& law, double m0);

// P(X_A > m | m0) = (exp(-beta m) - exp(-beta m0)) / (1 - exp(-beta m0)).
// Throws DomainError outside [0, m0].
double conditional_magnitude_sf(const AftershockLaw& law, double m, double m0);

struct SimulatedAftershock {
  double day = 1.0;  // integer-valued; heavy Omori tails overflow 64-bit integers
  double magnitude = 0.0;
};

struct SimulatedEvent {
  double m0 = 0.0;
  std::vector<SimulatedAftershock> aftershocks;
  std::optional<double> largest;
};

// Holds the day-sampling table for one law. Days are drawn from the
// normalised Omori weights by table lookup for the first 4096 days and by
// exact rejection sampling beyond.
class AftershockSimulator {
 public:
  explicit AftershockSimulator(const AftershockLaw& law);

  const AftershockLaw& law() const noexcept { return law_; }

  // Full Poisson sequence: N ~ Poisson(E[N | m0]), i.i.d. magnitudes by
  // inversion, days from the Omori weights.
  SimulatedEvent simulate_event(double m0, RngStream& rng) const;

  // Draws N and then only the maximum magnitude, by inverting
  // P(max <= m | N) = (1 - sf(m))^N. nullopt when N = 0.
  std::optional<double> simulate_largest(double m0, RngStream& rng) const;

  double sample_day(RngStream& rng) const;
  double sample_magnitude(double m0, RngStream& rng) const;

 private:
  AftershockLaw law_;
  std::vector<double> cumulative_;  // cumulative weights of days 1..table size
};

SimulatedEvent simulate_event(const AftershockLaw& law, double m0, RngStream& rng);

struct SimulatePairsOptions {
  // Round x and y to the 0.1 magnitude grid as a catalog would.
  bool round_to_grid = true;
};

// n independent (x, y) pairs: x from margin_x, y the largest simulated
// aftershock, censored below the threshold (or when there is none).
CensoredPairs simulate_pairs(const AftershockLaw& law, const TruncExp& margin_x, std::size_t n,
                             double censor_threshold, RngStream& rng,
                             const SimulatePairsOptions& opts = {});

// Lays the pairs out as a catalog that declusters back to the same pairs:
// each mainshock gets its observed largest aftershock one day later at the
// same epicentre, and events are spread over a 32 x 32 grid of 2.5 degree
// cells and 1000-day slots so that no two events share a window.
Catalog pairs_to_catalog(const CensoredPairs& pairs);

}  // namespace quaketail
