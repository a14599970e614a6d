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
#include <functional>
#include <span>

namespace quaketail {

struct KsResult {
  double statistic = 0.0;  // D
  double p_value = 1.0;
  std::size_t n = 0;
};

// Survival function of the limiting Kolmogorov distribution,
// P(K > x) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 x^2), first 100 terms.
// Below x = 0.5 the equivalent Jacobi theta form is used, where the
// alternating series converges too slowly.
double kolmogorov_sf(double x) noexcept;

// One-sample Kolmogorov-Smirnov test against a continuous cdf. The p-value
// is the asymptotic one evaluated at sqrt(n) D, with no correction for
// estimated parameters. Throws DomainError on an empty sample.
KsResult ks_test(std::span<const double> xs, const std::function<double(double)>& cdf);

}  // namespace quaketail
