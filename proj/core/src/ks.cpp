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

#include "quaketail/ks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "quaketail/error.hpp"

namespace quaketail {

double kolmogorov_sf(double x) noexcept {
  if (!(x > 0.0)) return 1.0;
  if (x < 0.5) {
    // P(K <= x) = sqrt(2 pi) / x * sum exp(-(2j-1)^2 pi^2 / (8 x^2))
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double cdf = 0.0;
    for (int j = 1; j <= 100; ++j) {
      const double term = std::exp(-(2.0 * j - 1.0) * (2.0 * j - 1.0) * pi2 / (8.0 * x * x));
      cdf += term;
      if (term < 1e-300) break;
    }
    cdf *= std::sqrt(2.0 * std::numbers::pi) / x;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * x * x);
    sum += (j % 2 == 1) ? term : -term;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> xs, const std::function<double(double)>& cdf) {
  if (xs.empty()) throw DomainError("KS test needs a non-empty sample");
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = std::clamp(cdf(sorted[i]), 0.0, 1.0);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return {d, kolmogorov_sf(std::sqrt(n) * d), sorted.size()};
}

}  // namespace quaketail
