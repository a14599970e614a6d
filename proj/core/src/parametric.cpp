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

#include "quaketail/parametric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quaketail/error.hpp"
#include "quaketail/numeric.hpp"

namespace quaketail {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kQuadTailMass = 1e-15;
constexpr double kLogParamLimit = 25.0;

numeric::QuadratureOptions tail_quadrature() {
  numeric::QuadratureOptions q;
  q.rel_tol = 1e-9;
  q.abs_tol = 1e-300;
  return q;
}

// Initial (beta, C) from the observed gaps: beta from their spread, then C
// matching the Gompertz mean to the sample mean.
std::pair<double, double> moment_start(const CensoredPairs& pairs) {
  double sum = 0.0, sum2 = 0.0;
  std::size_t n = 0;
  for (const auto& p : pairs.pairs()) {
    if (!p.y) continue;
    const double z = p.x - *p.y;
    sum += z;
    sum2 += z * z;
    ++n;
  }
  const double mean = std::max(sum / static_cast<double>(n), 0.05);
  const double var = n > 1 ? (sum2 - sum * sum / n) / (n - 1.0) : 0.0;
  const double beta = 1.0 / std::max(std::sqrt(std::max(var, 0.0)), 0.1);
  const auto mean_minus = [&](double log_c) { return mean_gap(Gompertz(beta, std::exp(log_c))) - mean; };
  double log_c = 0.0;
  if (mean_minus(-20.0) > 0.0 && mean_minus(20.0) < 0.0) {
    log_c = numeric::bisect(mean_minus, -20.0, 20.0, 1e-6);
  }
  return {beta, std::exp(log_c)};
}

}  // namespace

LogLikelihood censored_loglik(double beta, double c, const CensoredPairs& pairs) {
  if (!(beta > 0.0) || !(c > 0.0) || !std::isfinite(beta) || !std::isfinite(c)) {
    return {kNegInf, false};
  }
  const Gompertz g(beta, c);
  const double threshold = pairs.censor_threshold();
  double total = 0.0;
  for (const auto& p : pairs.pairs()) {
    total += p.y ? g.log_pdf(p.x - *p.y) : g.log_sf(p.x - threshold);
  }
  return {total, true};
}

GompertzFit fit_censored_gompertz(const CensoredPairs& pairs) {
  if (pairs.n_observed() == 0) {
    throw DomainError("censored Gompertz fit needs at least one observed aftershock");
  }
  const auto [beta0, c0] = moment_start(pairs);

  const auto objective = [&](const std::vector<double>& v) {
    if (std::fabs(v[0]) > kLogParamLimit || std::fabs(v[1]) > kLogParamLimit) {
      return std::numeric_limits<double>::infinity();
    }
    const auto ll = censored_loglik(std::exp(v[0]), std::exp(v[1]), pairs);
    return ll.admissible ? -ll.value : std::numeric_limits<double>::infinity();
  };

  constexpr double kFactors[5][2] = {{1.0, 1.0}, {0.5, 1.0}, {2.0, 1.0}, {1.0, 0.5}, {1.0, 2.0}};
  numeric::NelderMeadOptions opts;
  opts.rel_diameter_tol = 1e-9;
  opts.max_iterations = 10000;

  numeric::NelderMeadResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& f : kFactors) {
    auto r = numeric::nelder_mead(objective, {std::log(beta0 * f[0]), std::log(c0 * f[1])}, opts);
    if (r.value < best.value) best = std::move(r);
  }

  GompertzFit fit;
  fit.starts = 5;
  fit.gap = Gompertz(std::exp(best.x[0]), std::exp(best.x[1]));
  fit.loglik = -best.value;
  fit.iterations = best.iterations;
  fit.converged = best.converged;

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& p : pairs.pairs()) {
    if (!p.y) continue;
    lo = std::min(lo, p.x - *p.y);
    hi = std::max(hi, p.x - *p.y);
  }
  const bool at_edge = std::fabs(best.x[0]) > kLogParamLimit - 1.0 ||
                       std::fabs(best.x[1]) > kLogParamLimit - 1.0;
  fit.degenerate = pairs.n_observed() < 2 || !(hi > lo) || at_edge;
  if (at_edge) fit.converged = false;
  return fit;
}

ParametricFit fit_parametric(const CensoredPairs& pairs, double trunc_x) {
  std::vector<double> xs;
  xs.reserve(pairs.n());
  for (const auto& p : pairs.pairs()) xs.push_back(p.x);
  auto gap_fit = fit_censored_gompertz(pairs);
  return {ParametricModel{fit_truncexp(xs, trunc_x), gap_fit.gap}, gap_fit};
}

double joint_tail_parametric(const ParametricModel& model, double s, double t) {
  const auto& fx = model.margin_x;
  if (s < fx.truncation()) throw DomainError("joint tail query below the X truncation point");
  const double lower = std::isfinite(t) ? std::max(s, t) : s;
  const double upper = fx.quantile(kQuadTailMass);
  if (!(lower < upper)) return 0.0;
  const auto integrand = [&](double u) {
    // P(Z < u - t) written as -expm1(log sf) to keep tiny values accurate.
    return fx.pdf(u) * -std::expm1(model.gap.log_sf(u - t));
  };
  const double value = numeric::integrate(integrand, lower, upper, tail_quadrature());
  return std::clamp(value, 0.0, fx.sf(s));
}

double marginal_tail_y(const ParametricModel& model, double t) {
  return joint_tail_parametric(model, model.margin_x.truncation(), t);
}

std::vector<CompletedPair> impute_censored(const CensoredPairs& pairs, const ParametricModel& model,
                                           RngStream& rng) {
  std::vector<CompletedPair> out;
  out.reserve(pairs.n());
  for (const auto& p : pairs.pairs()) {
    if (p.y) {
      out.push_back({p.x, *p.y, false});
    } else {
      const double z = model.gap.sample_conditional(p.x - pairs.censor_threshold(), rng);
      out.push_back({p.x, p.x - z, true});
    }
  }
  return out;
}

double mean_gap(const Gompertz& gap) {
  const double upper = gap.quantile(1e-300);
  return numeric::integrate([&](double z) { return gap.sf(z); }, 0.0, upper, tail_quadrature());
}

LevelCurve level_curve_parametric(const ParametricModel& model, double probability,
                                  std::span<const double> x_grid) {
  if (!(probability > 0.0 && probability < 1.0)) {
    throw DomainError("level-curve probability must lie in (0, 1)");
  }
  LevelCurve curve;
  curve.probability = probability;
  const double y_hi = model.margin_x.quantile(kQuadTailMass);
  for (const double x : x_grid) {
    if (x < model.margin_x.truncation() || model.margin_x.sf(x) < probability) {
      curve.omitted.push_back(x);
      continue;
    }
    const auto excess = [&](double y) { return joint_tail_parametric(model, x, y) - probability; };
    if (excess(0.0) < 0.0) {
      curve.omitted.push_back(x);
      continue;
    }
    curve.points.push_back({x, numeric::bisect(excess, 0.0, y_hi, 1e-11), false});
  }
  make_non_increasing(curve);
  return curve;
}

ParametricGof parametric_gof(const CensoredPairs& pairs, const ParametricModel& model,
                             RngStream& jitter_rng, RngStream& impute_rng, double half_width) {
  ParametricGof gof;
  std::vector<double> xs;
  xs.reserve(pairs.n());
  for (const auto& p : pairs.pairs()) xs.push_back(p.x);
  gof.jittered_x = jitter(xs, jitter_rng, half_width);
  gof.margin_x = ks_test(gof.jittered_x, [&](double v) { return model.margin_x.cdf(v); });

  gof.completed = impute_censored(pairs, model, impute_rng);
  std::vector<double> gaps;
  gaps.reserve(gof.completed.size());
  for (const auto& c : gof.completed) gaps.push_back(c.x - c.y);
  gof.jittered_gaps = jitter(gaps, jitter_rng, half_width);
  gof.gap = ks_test(gof.jittered_gaps, [&](double z) { return model.gap.cdf(z); });
  return gof;
}

}  // namespace quaketail
