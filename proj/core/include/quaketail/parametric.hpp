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

#include "quaketail/decluster.hpp"
#include "quaketail/distributions.hpp"
#include "quaketail/ks.hpp"
#include "quaketail/level_curve.hpp"
#include "quaketail/rng.hpp"

namespace quaketail {

// Joint law of (X, Y) built from an exponential mainshock margin and a
// Gompertz gap Z = X - Y drawn independently of X. A gap larger than X stands
// for "no aftershock".
struct ParametricModel {
  TruncExp margin_x;
  Gompertz gap;
};

struct LogLikelihood {
  double value = 0.0;
  bool admissible = true;  // false for non-positive parameters (value = -inf)
};

// Sum of log f_Z(x - y) over observed pairs plus log sf_Z(x - threshold) over
// censored ones (the gap exceeds x - threshold exactly when Y falls below
// the threshold).
LogLikelihood censored_loglik(double beta, double c, const CensoredPairs& pairs);

struct GompertzFit {
  Gompertz gap{1.0, 1.0};
  double loglik = 0.0;
  int iterations = 0;  // of the winning start
  int starts = 0;
  bool converged = false;
  // Fewer than two distinct observed gaps: the likelihood has no interior
  // maximum and the returned point is only the best one visited.
  bool degenerate = false;
};

// Censored maximum likelihood for (beta, C). Nelder-Mead on (log beta, log C)
// from five starts around a moment-matched initial point. Throws DomainError
// when no pair is observed.
GompertzFit fit_censored_gompertz(const CensoredPairs& pairs);

struct ParametricFit {
  ParametricModel model;
  GompertzFit gap_fit;
};

// Fits the X margin (closed form, truncated at trunc_x) and the gap.
ParametricFit fit_parametric(const CensoredPairs& pairs, double trunc_x = 4.95);

// P(X > s, Y > t) = int_s^inf f_X(u) P(Z < u - t) du by adaptive quadrature.
// t may be -infinity. Throws DomainError if s lies below the X truncation.
double joint_tail_parametric(const ParametricModel& model, double s, double t);

// P(Y > t) under the model.
double marginal_tail_y(const ParametricModel& model, double t);

struct CompletedPair {
  double x = 0.0;
  double y = 0.0;
  bool imputed = false;
};

// Fills censored y with x - z, z drawn from the gap law conditioned on
// z >= x - threshold. Observed pairs pass through untouched.
std::vector<CompletedPair> impute_censored(const CensoredPairs& pairs, const ParametricModel& model,
                                           RngStream& rng);

// E[Z] = int_0^inf sf_Z(z) dz.
double mean_gap(const Gompertz& gap);
inline double mean_gap(const ParametricModel& model) { return mean_gap(model.gap); }

// For each grid x with P(X > x) >= p, the y solving P(X > x, Y > y) = p,
// found by bisection on y >= 0. Grid points where p is out of reach are
// listed in `omitted`.
LevelCurve level_curve_parametric(const ParametricModel& model, double probability,
                                  std::span<const double> x_grid);

struct ParametricGof {
  KsResult margin_x;
  KsResult gap;
  std::vector<double> jittered_x;
  std::vector<CompletedPair> completed;
  std::vector<double> jittered_gaps;
};

// Jitters the recorded magnitudes, imputes censored aftershocks and runs KS
// tests of the X margin and of the completed gaps against the fitted laws.
ParametricGof parametric_gof(const CensoredPairs& pairs, const ParametricModel& model,
                             RngStream& jitter_rng, RngStream& impute_rng,
                             double half_width = 0.05);

}  // namespace quaketail
