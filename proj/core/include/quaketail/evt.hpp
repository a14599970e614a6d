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
#include <functional>
#include <span>
#include <vector>

#include "quaketail/decluster.hpp"
#include "quaketail/distributions.hpp"
#include "quaketail/ks.hpp"
#include "quaketail/level_curve.hpp"
#include "quaketail/rng.hpp"

namespace quaketail {

// Joint ranks 1..n of the pairs. Censored Y take ranks 1..n - n_observed in
// index order, below every observed Y. Ties on the magnitude grid are broken
// by a uniformly random permutation of their rank slots.
struct RankedSample {
  std::size_t n = 0;
  std::size_t n_observed = 0;
  std::vector<std::int32_t> ranks_x;
  std::vector<std::int32_t> ranks_y;
  std::uint64_t tie_seed = 0;
  std::uint64_t tie_stream = 0;

  friend bool operator==(const RankedSample&, const RankedSample&) = default;
};

RankedSample rank_with_random_ties(const CensoredPairs& pairs, RngStream& rng);

// Rank estimator of the tail dependence function,
// R(x, 1) ~ (1/k) #{i : Rx_i > n + 1/2 - k x, Ry_i > n + 1/2 - k}.
// Requires 1 <= k < n_observed so censored Y can never enter the count.
double r_hat(const RankedSample& rs, double x, int k);

// Same estimator at a general point (x, y); needs k y < n_observed.
double r_hat_xy(const RankedSample& rs, double x, double y, int k);

// Beta-copula smoothed R(x, 1): each indicator 1{R > n + 1/2 - m} becomes
// P[Binomial(n, 1 - m/n) <= R - 1], with m/n clamped to [0, 1]. The Y factors
// depend only on k and are computed once.
class SmoothedTailDependence {
 public:
  SmoothedTailDependence(const RankedSample& rs, int k);
  double operator()(double x) const;
  int k() const noexcept { return k_; }

 private:
  const RankedSample* rs_;
  int k_;
  std::vector<double> weight_y_;  // per pair
};

double r_hat_smoothed(const RankedSample& rs, double x, int k);

struct KDiagnosticRow {
  double x = 0.0;
  int k = 0;
  double r_hat = 0.0;
};

// r_hat over xs x [k_lo, k_hi]; k values outside [1, n_observed) are skipped.
std::vector<KDiagnosticRow> k_diagnostic(const RankedSample& rs, std::span<const double> xs,
                                         int k_lo, int k_hi);

struct EvtFit {
  int k = 40;
  TruncExp margin_x{1.0, 4.95};
  TruncExp margin_y{1.0, 4.55};
  // Fraction of all n pairs whose aftershock lies above the Y truncation, so
  // that P(Y > t) = y_exceedance * margin_y.sf(t) is unconditional.
  double y_exceedance = 1.0;
  RankedSample ranked;
};

// Fits both exponential margins and ranks the pairs. The Y margin uses the
// observed aftershocks above trunc_y. Throws DomainError unless
// 1 <= k < n_observed.
EvtFit fit_evt(const CensoredPairs& pairs, RngStream& tie_rng, int k = 40, double trunc_x = 4.95,
               double trunc_y = 4.55);

inline constexpr double kRatioMin = 0.02;
inline constexpr double kRatioMax = 5.0;

struct TailEstimate {
  double probability = 0.0;
  double p1 = 0.0;     // P(X > s)
  double p2 = 0.0;     // P(Y > t)
  double ratio = 0.0;  // p1 / p2 actually used
  bool clamped = false;  // p1 / p2 fell outside [0.02, 5]
};

// P(X > s, Y > t) ~ p2 R(p1 / p2, 1) with the unsmoothed estimator, clamped
// to [0, min(p1, p2)]. Throws DomainError below either truncation point.
TailEstimate tail_prob_evt(const EvtFit& fit, double s, double t);

// L(x, y) = x + y - R(x, y).
inline double stable_tail_L(double x, double y, double r) noexcept { return x + y - r; }

// A(w) = 1 - R(1 - w, w), with A(0) = A(1) = 1 and the result clamped to
// [max(w, 1 - w), 1]. Throws DomainError outside [0, 1].
double pickands_A(const std::function<double(double, double)>& r, double w);
double pickands_A(const EvtFit& fit, double w);

// Level curve of the smoothed estimator: for each grid x, the t with
// p2(t) R_b(p1 / p2(t), 1) = p, by bisection over t from the Y truncation up
// to the point where p2(t) = p. Cleaned to be non-increasing.
LevelCurve level_curve_evt(const EvtFit& fit, double probability, std::span<const double> x_grid);

struct MarginGof {
  KsResult ks;
  std::vector<double> jittered;
};

// KS test of the jittered observed aftershocks above the Y truncation.
MarginGof evt_margin_y_gof(const CensoredPairs& pairs, const EvtFit& fit, RngStream& jitter_rng,
                           double half_width = 0.05);

}  // namespace quaketail
