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

#include "quaketail/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "quaketail/error.hpp"

namespace quaketail {

TruncExp::TruncExp(double rate, double truncation) : rate_(rate), truncation_(truncation) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw DomainError("exponential rate must be positive and finite");
  }
  if (!std::isfinite(truncation)) throw DomainError("truncation point must be finite");
}

double TruncExp::sf(double x) const noexcept {
  if (x <= truncation_) return 1.0;
  return std::exp(-rate_ * (x - truncation_));
}

double TruncExp::pdf(double x) const noexcept {
  if (x < truncation_) return 0.0;
  return rate_ * std::exp(-rate_ * (x - truncation_));
}

double TruncExp::log_pdf(double x) const noexcept {
  if (x < truncation_) return -std::numeric_limits<double>::infinity();
  return std::log(rate_) - rate_ * (x - truncation_);
}

double TruncExp::quantile(double p) const {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("quantile probability must lie in (0, 1]");
  return truncation_ - std::log(p) / rate_;
}

double TruncExp::sample(RngStream& rng) const noexcept {
  return truncation_ + rng.exponential() / rate_;
}

TruncExp fit_truncexp(std::span<const double> xs, double truncation) {
  if (xs.size() < 2) throw DomainError("fit_truncexp needs at least two observations");
  double excess = 0.0;
  for (const double x : xs) {
    if (x < truncation) {
      throw DomainError("observation " + std::to_string(x) + " lies below the truncation point");
    }
    excess += x - truncation;
  }
  excess /= static_cast<double>(xs.size());
  if (!(excess > 0.0)) throw DomainError("mean excess over the truncation point is zero");
  return TruncExp(1.0 / excess, truncation);
}

Gompertz::Gompertz(double beta, double c) : beta_(beta), c_(c) {
  if (!(beta > 0.0) || !std::isfinite(beta) || !(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("Gompertz parameters must be positive and finite");
  }
}

double Gompertz::log_sf(double z) const noexcept {
  if (z <= 0.0) return 0.0;
  return -c_ * std::expm1(beta_ * z);
}

double Gompertz::sf(double z) const noexcept { return std::exp(log_sf(z)); }

double Gompertz::cdf(double z) const noexcept { return -std::expm1(log_sf(z)); }

double Gompertz::log_pdf(double z) const noexcept {
  if (z < 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(c_) + std::log(beta_) + beta_ * z - c_ * std::expm1(beta_ * z);
}

double Gompertz::pdf(double z) const noexcept {
  if (z < 0.0) return 0.0;
  return std::exp(log_pdf(z));
}

double Gompertz::quantile(double p) const {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("quantile probability must lie in (0, 1]");
  return std::log1p(-std::log(p) / c_) / beta_;
}

double Gompertz::sample(RngStream& rng) const noexcept {
  // -log(u) is a standard exponential draw.
  return std::log1p(rng.exponential() / c_) / beta_;
}

double Gompertz::sample_conditional(double z_min, RngStream& rng) const {
  if (z_min <= 0.0) return sample(rng);
  if (sf(z_min) == 0.0) {
    throw DomainError("censoring bound " + std::to_string(z_min) +
                      " is unreachable: Gompertz survival underflows to zero");
  }
  // sf(z) = u sf(z_min)  <=>  exp(beta z) = exp(beta z_min) - log(u) / C
  const double z = std::log(std::exp(beta_ * z_min) + rng.exponential() / c_) / beta_;
  return std::max(z, z_min);
}

std::vector<double> jitter(std::span<const double> xs, RngStream& rng, double half_width) {
  if (!(half_width > 0.0)) throw DomainError("jitter half-width must be positive");
  std::vector<double> out;
  out.reserve(xs.size());
  for (const double x : xs) out.push_back(x + rng.uniform(-half_width, half_width));
  return out;
}

}  // namespace quaketail
