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

#include <span>
#include <vector>

#include "quaketail/rng.hpp"

namespace quaketail {

// Exponential magnitude law left-truncated at t0: sf(x) = exp(-rate (x - t0))
// for x >= t0. Truncation points sit half a grid step below the smallest
// recorded magnitude (4.95 for mainshocks >= 5.0).
class TruncExp {
 public:
  // Throws DomainError unless rate > 0 and truncation is finite.
  TruncExp(double rate, double truncation);

  double rate() const noexcept { return rate_; }
  double truncation() const noexcept { return truncation_; }

  double sf(double x) const noexcept;  // 1 below the truncation point
  double cdf(double x) const noexcept { return 1.0 - sf(x); }
  double pdf(double x) const noexcept;
  double log_pdf(double x) const noexcept;
  // Upper-tail quantile: the x with sf(x) = p, p in (0, 1].
  double quantile(double p) const;
  double mean() const noexcept { return truncation_ + 1.0 / rate_; }
  double sample(RngStream& rng) const noexcept;

  friend bool operator==(const TruncExp&, const TruncExp&) = default;

 private:
  double rate_;
  double truncation_;
};

// Closed-form MLE: rate = 1 / mean(x - t0). Needs two or more values, all
// >= t0, with a positive mean excess.
TruncExp fit_truncexp(std::span<const double> xs, double truncation);

// Gompertz law of the mainshock/aftershock gap:
// sf(z) = exp(-C (exp(beta z) - 1)) for z >= 0.
class Gompertz {
 public:
  // Throws DomainError unless beta > 0 and c > 0.
  Gompertz(double beta, double c);

  double beta() const noexcept { return beta_; }
  double c() const noexcept { return c_; }

  double sf(double z) const noexcept;
  double log_sf(double z) const noexcept;
  double cdf(double z) const noexcept;
  double pdf(double z) const noexcept;
  double log_pdf(double z) const noexcept;
  // Upper-tail quantile: z = log(1 - log(p) / C) / beta.
  double quantile(double p) const;
  double sample(RngStream& rng) const noexcept;
  // Draw from the law conditioned on z >= z_min by inverting
  // sf(z) / sf(z_min). Throws DomainError when sf(z_min) underflows to zero,
  // i.e. the bound cannot be reached in double precision.
  double sample_conditional(double z_min, RngStream& rng) const;

  friend bool operator==(const Gompertz&, const Gompertz&) = default;

 private:
  double beta_;
  double c_;
};

// Adds independent uniform(-half_width, half_width) noise to each value.
std::vector<double> jitter(std::span<const double> xs, RngStream& rng, double half_width = 0.05);

}  // namespace quaketail
