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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "quaketail/decluster.hpp"
#include "quaketail/distributions.hpp"
#include "quaketail/evt.hpp"
#include "quaketail/parametric.hpp"
#include "quaketail/rng.hpp"

namespace quaketail::testing {

// Continuous pairs straight from the parametric model: X from the margin,
// an independent Gompertz gap, Y = X - Z censored below the threshold.
inline CensoredPairs model_pairs(const ParametricModel& m, std::size_t n, double threshold,
                                 RngStream& rng) {
  std::vector<CensoredPair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = m.margin_x.sample(rng);
    const double y = x - m.gap.sample(rng);
    out.push_back({x, y >= threshold ? std::optional<double>(y) : std::nullopt});
  }
  return CensoredPairs(std::move(out), threshold);
}

// Composite Simpson on a uniform grid.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / (2 * panels);
  double s = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + h * i);
  return s * h / 3.0;
}

// P(X > s, Y > t) integrated over v = sf_X(u) in (0, sf_X(max(s, t))].
inline double joint_tail_oracle(const ParametricModel& m, double s, double t) {
  const auto& fx = m.margin_x;
  const double lower = std::isfinite(t) ? std::max(s, t) : s;
  const double vmax = fx.sf(lower);
  auto g = [&](double v) {
    if (v <= 0.0) return 1.0;
    const double u = fx.truncation() - std::log(v) / fx.rate();
    return std::isfinite(t) ? 1.0 - m.gap.sf(u - t) : 1.0;
  };
  return simpson(g, 0.0, vmax, 200000);
}

// Textbook uncensored Gompertz MLE: C is profiled out as n / sum(exp(beta z) - 1)
// and the profile log-likelihood is maximised over log beta by golden section.
struct PlainGompertzMle {
  double beta;
  double c;
};

inline PlainGompertzMle plain_gompertz_mle(const std::vector<double>& z) {
  const double n = static_cast<double>(z.size());
  const double sz = std::accumulate(z.begin(), z.end(), 0.0);
  auto c_of = [&](double beta) {
    double s = 0.0;
    for (const double v : z) s += std::expm1(beta * v);
    return n / s;
  };
  auto profile = [&](double lb) {
    const double beta = std::exp(lb);
    const double c = c_of(beta);
    return n * std::log(c) + n * lb + beta * sz - n;
  };
  double a = std::log(1e-3), b = std::log(1e3);
  // Coarse scan to land in the right basin.
  double best = a, best_v = -INFINITY;
  for (int i = 0; i <= 2000; ++i) {
    const double lb = a + (b - a) * i / 2000.0;
    const double v = profile(lb);
    if (v > best_v) {
      best_v = v;
      best = lb;
    }
  }
  const double step = (b - a) / 2000.0;
  a = best - step;
  b = best + step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = profile(x1), f2 = profile(x2);
  for (int i = 0; i < 200; ++i) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = profile(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = profile(x2);
    }
  }
  const double beta = std::exp(0.5 * (a + b));
  return {beta, c_of(beta)};
}

// Double-loop count of the rank estimator at (x, y): the pairs whose X rank
// clears its threshold, matched by index against those whose Y rank does.
inline double r_hat_brute(const std::vector<std::int32_t>& rx, const std::vector<std::int32_t>& ry,
                          double x, double y, int k) {
  const double n = static_cast<double>(rx.size());
  std::vector<std::size_t> big_x, big_y;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    if (rx[i] > n + 0.5 - k * x) big_x.push_back(i);
    if (ry[i] > n + 0.5 - k * y) big_y.push_back(i);
  }
  int count = 0;
  for (const auto i : big_x) {
    for (const auto j : big_y) count += i == j;
  }
  return static_cast<double>(count) / k;
}

inline std::vector<std::int32_t> random_permutation(std::size_t n, RngStream& rng) {
  std::vector<std::int32_t> p(n);
  std::iota(p.begin(), p.end(), 1);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

}  // namespace quaketail::testing
