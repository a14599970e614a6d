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

#include "quaketail/evt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "quaketail/error.hpp"
#include "quaketail/numeric.hpp"

namespace quaketail {

namespace {

constexpr double kTieEps = 1e-9;

// Assigns ranks first_rank, first_rank + 1, ... to `idx` in value order,
// shuffling each group of tied values.
void rank_block(std::vector<std::size_t> idx, const std::vector<double>& values,
                std::int32_t first_rank, RngStream& rng, std::vector<std::int32_t>& ranks) {
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::size_t start = 0;
  while (start < idx.size()) {
    std::size_t end = start + 1;
    while (end < idx.size() && values[idx[end]] - values[idx[start]] <= kTieEps) ++end;
    for (std::size_t i = end - start; i > 1; --i) {
      const std::size_t j = rng.below(i);
      std::swap(idx[start + i - 1], idx[start + j]);
    }
    start = end;
  }
  for (std::size_t r = 0; r < idx.size(); ++r) {
    ranks[idx[r]] = first_rank + static_cast<std::int32_t>(r);
  }
}

void check_k(const RankedSample& rs, int k) {
  if (k < 1 || static_cast<std::size_t>(k) >= rs.n_observed) {
    throw DomainError("k = " + std::to_string(k) + " must satisfy 1 <= k < n_observed = " +
                      std::to_string(rs.n_observed));
  }
}

// c[j] = P(Binomial(n, q) <= j), j = 0..n.
std::vector<double> binomial_cdf_table(std::size_t n, double q) {
  std::vector<double> c(n + 1, 0.0);
  if (q <= 0.0) {
    std::fill(c.begin(), c.end(), 1.0);
    return c;
  }
  if (q >= 1.0) {
    c[n] = 1.0;
    return c;
  }
  const double lq = std::log(q), l1q = std::log1p(-q);
  const double lfn = std::lgamma(static_cast<double>(n) + 1.0);
  double acc = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const double jd = static_cast<double>(j);
    const double lp = lfn - std::lgamma(jd + 1.0) - std::lgamma(static_cast<double>(n - j) + 1.0) +
                      jd * lq + static_cast<double>(n - j) * l1q;
    acc += std::exp(lp);
    c[j] = std::min(acc, 1.0);
  }
  return c;
}

// B(r, m) = P[Binomial(n, 1 - m/n) <= r - 1] for every rank r = 1..n.
std::vector<double> smoothed_indicator(std::size_t n, double m) {
  const double frac = std::clamp(m / static_cast<double>(n), 0.0, 1.0);
  return binomial_cdf_table(n, 1.0 - frac);
}

}  // namespace

RankedSample rank_with_random_ties(const CensoredPairs& pairs, RngStream& rng) {
  RankedSample rs;
  rs.n = pairs.n();
  rs.n_observed = pairs.n_observed();
  rs.tie_seed = rng.seed();
  rs.tie_stream = rng.stream();
  rs.ranks_x.assign(rs.n, 0);
  rs.ranks_y.assign(rs.n, 0);

  std::vector<double> xs(rs.n), ys(rs.n, 0.0);
  std::vector<std::size_t> all(rs.n), observed;
  std::int32_t next_censored = 1;
  for (std::size_t i = 0; i < rs.n; ++i) {
    const auto& p = pairs.pairs()[i];
    xs[i] = p.x;
    all[i] = i;
    if (p.y) {
      ys[i] = *p.y;
      observed.push_back(i);
    } else {
      rs.ranks_y[i] = next_censored++;
    }
  }
  rank_block(all, xs, 1, rng, rs.ranks_x);
  rank_block(observed, ys, next_censored, rng, rs.ranks_y);
  return rs;
}

double r_hat_xy(const RankedSample& rs, double x, double y, int k) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (!(x >= 0.0) || !(y >= 0.0)) throw DomainError("r_hat arguments must be non-negative");
  if (k * y >= static_cast<double>(rs.n_observed)) {
    throw DomainError("k * y reaches the censored aftershock ranks");
  }
  const double n = static_cast<double>(rs.n);
  const double tx = n + 0.5 - k * x;
  const double ty = n + 0.5 - k * y;
  std::size_t count = 0;
  for (std::size_t i = 0; i < rs.n; ++i) {
    if (rs.ranks_x[i] > tx && rs.ranks_y[i] > ty) ++count;
  }
  return static_cast<double>(count) / k;
}

double r_hat(const RankedSample& rs, double x, int k) {
  check_k(rs, k);
  return r_hat_xy(rs, x, 1.0, k);
}

SmoothedTailDependence::SmoothedTailDependence(const RankedSample& rs, int k) : rs_(&rs), k_(k) {
  check_k(rs, k);
  const auto by = smoothed_indicator(rs.n, static_cast<double>(k));
  weight_y_.resize(rs.n);
  for (std::size_t i = 0; i < rs.n; ++i) weight_y_[i] = by[rs.ranks_y[i] - 1];
}

double SmoothedTailDependence::operator()(double x) const {
  if (!(x >= 0.0)) throw DomainError("r_hat_smoothed argument must be non-negative");
  const auto bx = smoothed_indicator(rs_->n, k_ * x);
  double sum = 0.0;
  for (std::size_t i = 0; i < rs_->n; ++i) sum += bx[rs_->ranks_x[i] - 1] * weight_y_[i];
  return sum / k_;
}

double r_hat_smoothed(const RankedSample& rs, double x, int k) {
  return SmoothedTailDependence(rs, k)(x);
}

std::vector<KDiagnosticRow> k_diagnostic(const RankedSample& rs, std::span<const double> xs,
                                         int k_lo, int k_hi) {
  std::vector<KDiagnosticRow> rows;
  for (const double x : xs) {
    for (int k = std::max(k_lo, 1); k <= k_hi; ++k) {
      if (static_cast<std::size_t>(k) >= rs.n_observed) break;
      rows.push_back({x, k, r_hat(rs, x, k)});
    }
  }
  return rows;
}

EvtFit fit_evt(const CensoredPairs& pairs, RngStream& tie_rng, int k, double trunc_x,
               double trunc_y) {
  std::vector<double> xs, ys;
  for (const auto& p : pairs.pairs()) {
    xs.push_back(p.x);
    if (p.y && *p.y > trunc_y) ys.push_back(*p.y);
  }
  EvtFit fit;
  fit.k = k;
  fit.margin_x = fit_truncexp(xs, trunc_x);
  fit.margin_y = fit_truncexp(ys, trunc_y);
  fit.y_exceedance = static_cast<double>(ys.size()) / static_cast<double>(pairs.n());
  fit.ranked = rank_with_random_ties(pairs, tie_rng);
  check_k(fit.ranked, k);
  return fit;
}

TailEstimate tail_prob_evt(const EvtFit& fit, double s, double t) {
  if (s < fit.margin_x.truncation() || t < fit.margin_y.truncation()) {
    throw DomainError("tail query below the margin truncation points");
  }
  TailEstimate est;
  est.p1 = fit.margin_x.sf(s);
  est.p2 = fit.y_exceedance * fit.margin_y.sf(t);
  if (!(est.p2 > 0.0)) return est;
  const double raw = est.p1 / est.p2;
  est.ratio = std::clamp(raw, kRatioMin, kRatioMax);
  est.clamped = est.ratio != raw;
  est.probability = std::clamp(est.p2 * r_hat(fit.ranked, est.ratio, fit.k), 0.0,
                               std::min(est.p1, est.p2));
  return est;
}

double pickands_A(const std::function<double(double, double)>& r, double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("Pickands argument must lie in [0, 1]");
  if (w == 0.0 || w == 1.0) return 1.0;
  return std::clamp(1.0 - r(1.0 - w, w), std::max(w, 1.0 - w), 1.0);
}

double pickands_A(const EvtFit& fit, double w) {
  return pickands_A([&](double x, double y) { return r_hat_xy(fit.ranked, x, y, fit.k); }, w);
}

LevelCurve level_curve_evt(const EvtFit& fit, double probability, std::span<const double> x_grid) {
  if (!(probability > 0.0 && probability < 1.0)) {
    throw DomainError("level-curve probability must lie in (0, 1)");
  }
  const SmoothedTailDependence smoothed(fit.ranked, fit.k);
  LevelCurve curve;
  curve.probability = probability;
  const double t_lo = fit.margin_y.truncation();
  const double p2_lo = fit.y_exceedance;
  for (const double s : x_grid) {
    if (s < fit.margin_x.truncation() || p2_lo < probability) {
      curve.omitted.push_back(s);
      continue;
    }
    const double p1 = fit.margin_x.sf(s);
    const double t_hi = fit.margin_y.quantile(probability / fit.y_exceedance);
    const auto excess = [&](double t) {
      const double p2 = fit.y_exceedance * fit.margin_y.sf(t);
      return p2 * smoothed(std::clamp(p1 / p2, kRatioMin, kRatioMax)) - probability;
    };
    if (excess(t_lo) < 0.0) {
      curve.omitted.push_back(s);
      continue;
    }
    curve.points.push_back({s, numeric::bisect(excess, t_lo, t_hi, 1e-11), false});
  }
  make_non_increasing(curve);
  return curve;
}

MarginGof evt_margin_y_gof(const CensoredPairs& pairs, const EvtFit& fit, RngStream& jitter_rng,
                           double half_width) {
  std::vector<double> ys;
  for (const auto& p : pairs.pairs()) {
    if (p.y && *p.y > fit.margin_y.truncation()) ys.push_back(*p.y);
  }
  MarginGof out;
  out.jittered = jitter(ys, jitter_rng, half_width);
  out.ks = ks_test(out.jittered, [&](double v) { return fit.margin_y.cdf(v); });
  return out;
}

}  // namespace quaketail
