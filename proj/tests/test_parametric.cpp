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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "quaketail/error.hpp"
#include "quaketail/ks.hpp"
#include "quaketail/parametric.hpp"
#include "support.hpp"

namespace quaketail {
namespace {

const ParametricModel kModel{TruncExp(2.3, 4.95), Gompertz(2.3, 1.0)};
constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(CensoredLoglik, AllCensoredSinglePair) {
  const CensoredPairs pairs({{5.0, std::nullopt}}, 4.0);
  const auto ll = censored_loglik(1.0, 1.0, pairs);
  EXPECT_TRUE(ll.admissible);
  EXPECT_NEAR(ll.value, -(std::exp(1.0) - 1.0), 1e-14);
}

TEST(CensoredLoglik, NoCensoringIsPlainGompertz) {
  RngStream rng(1, 1);
  const auto pairs = testing::model_pairs(kModel, 500, 0.0, rng);
  ASSERT_EQ(pairs.n_observed(), pairs.n());
  const Gompertz g(1.7, 0.6);
  double plain = 0.0;
  for (const auto& p : pairs.pairs()) plain += std::log(g.pdf(p.x - *p.y));
  EXPECT_NEAR(censored_loglik(1.7, 0.6, pairs).value, plain, 1e-9 * std::fabs(plain));
}

TEST(CensoredLoglik, Inadmissible) {
  const CensoredPairs pairs({{5.0, 4.5}}, 4.0);
  EXPECT_FALSE(censored_loglik(-1.0, 1.0, pairs).admissible);
  EXPECT_FALSE(censored_loglik(1.0, 0.0, pairs).admissible);
}

TEST(CensoredLoglik, TrueParametersBeatPerturbed) {
  RngStream rng(2, 2);
  const auto pairs = testing::model_pairs(kModel, 10000, 4.0, rng);
  const double truth = censored_loglik(2.3, 1.0, pairs).value;
  int wins = 0;
  RngStream pert(2, 3);
  for (int i = 0; i < 100; ++i) {
    const double angle = pert.uniform(0.0, 2.0 * std::numbers::pi);
    const double beta = 2.3 * (1.0 + 0.1 * std::cos(angle));
    const double c = 1.0 * (1.0 + 0.1 * std::sin(angle));
    wins += truth >= censored_loglik(beta, c, pairs).value;
  }
  EXPECT_GE(wins, 95);
}

TEST(FitCensoredGompertz, MatchesUncensoredMle) {
  RngStream rng(3, 3);
  const ParametricModel wide{TruncExp(2.3, 9.0), Gompertz(2.3, 1.0)};
  const auto pairs = testing::model_pairs(wide, 2000, 4.0, rng);
  ASSERT_EQ(pairs.n_observed(), pairs.n());
  std::vector<double> z;
  for (const auto& p : pairs.pairs()) z.push_back(p.x - *p.y);
  const auto oracle = testing::plain_gompertz_mle(z);
  const auto fit = fit_censored_gompertz(pairs);
  EXPECT_TRUE(fit.converged);
  EXPECT_FALSE(fit.degenerate);
  EXPECT_NEAR(fit.gap.beta() / oracle.beta, 1.0, 1e-6);
  EXPECT_NEAR(fit.gap.c() / oracle.c, 1.0, 1e-6);
}

TEST(FitCensoredGompertz, RecoversWithCensoring) {
  RngStream rng(4, 4);
  const ParametricModel m{TruncExp(2.3, 4.95), Gompertz(1.2, 0.3)};
  const auto pairs = testing::model_pairs(m, 5000, 4.0, rng);
  ASSERT_LT(pairs.n_observed(), pairs.n());
  const auto fit = fit_censored_gompertz(pairs);
  EXPECT_TRUE(fit.converged);
  EXPECT_NEAR(fit.gap.beta() / 1.2, 1.0, 0.1);
  EXPECT_NEAR(fit.gap.c() / 0.3, 1.0, 0.1);
}

TEST(FitCensoredGompertz, DegenerateInputs) {
  const auto one = fit_censored_gompertz(CensoredPairs({{6.0, 5.0}}, 4.0));
  EXPECT_TRUE(one.degenerate || !one.converged);
  const auto same =
      fit_censored_gompertz(CensoredPairs({{6.0, 5.0}, {6.5, 5.5}, {5.0, std::nullopt}}, 4.0));
  EXPECT_TRUE(same.degenerate);
  EXPECT_THROW(fit_censored_gompertz(CensoredPairs({{6.0, std::nullopt}}, 4.0)), DomainError);
}

TEST(JointTail, MatchesOracle) {
  for (const double s : {4.95, 5.5, 6.3, 7.6}) {
    for (const double t : {-kInf, 2.0, 4.0, 5.0, 5.8, 7.0}) {
      const double got = joint_tail_parametric(kModel, s, t);
      const double want = testing::joint_tail_oracle(kModel, s, t);
      EXPECT_NEAR(got, want, 1e-9 * want + 1e-14) << s << ' ' << t;
    }
  }
}

TEST(JointTail, Marginalisation) {
  for (int i = 0; i < 50; ++i) {
    const double s = 4.95 + 0.1 * i;
    EXPECT_NEAR(joint_tail_parametric(kModel, s, -kInf), kModel.margin_x.sf(s), 1e-9);
  }
  EXPECT_NEAR(joint_tail_parametric(kModel, 4.95, -kInf), 1.0, 1e-12);
}

TEST(JointTail, EmptyEvent) {
  EXPECT_NEAR(joint_tail_parametric(kModel, 5.0, 30.0), 0.0, 1e-12);
  EXPECT_THROW(joint_tail_parametric(kModel, 4.0, 3.0), DomainError);
}

TEST(JointTail, MonotoneAndBounded) {
  for (double s = 4.95; s < 8.0; s += 0.25) {
    double prev = 1.0;
    for (double t = 3.0; t < 8.0; t += 0.25) {
      const double p = joint_tail_parametric(kModel, s, t);
      EXPECT_LE(p, prev * (1 + 1e-9));
      EXPECT_LE(p, joint_tail_parametric(kModel, s - 0.0, t));
      EXPECT_LE(p, kModel.margin_x.sf(s) * (1 + 1e-12));
      EXPECT_LE(p, marginal_tail_y(kModel, t) * (1 + 1e-9));
      if (s > 5.0) {
        EXPECT_LE(p, joint_tail_parametric(kModel, s - 0.25, t) * (1 + 1e-9));
      }
      prev = p;
    }
  }
}

TEST(JointTail, MarginalYIsJointAtTruncation) {
  for (const double t : {3.0, 4.5, 6.0}) {
    EXPECT_EQ(marginal_tail_y(kModel, t), joint_tail_parametric(kModel, 4.95, t));
  }
}

TEST(Impute, PassthroughAndBounds) {
  RngStream data(5, 5), rng(5, 6);
  const auto pairs = testing::model_pairs({TruncExp(2.3, 4.95), Gompertz(1.0, 0.5)}, 2000, 4.0, data);
  ASSERT_LT(pairs.n_observed(), pairs.n());
  const auto done = impute_censored(pairs, kModel, rng);
  ASSERT_EQ(done.size(), pairs.n());
  for (std::size_t i = 0; i < done.size(); ++i) {
    const auto& p = pairs.pairs()[i];
    EXPECT_EQ(done[i].x, p.x);
    if (p.y) {
      EXPECT_FALSE(done[i].imputed);
      EXPECT_EQ(done[i].y, *p.y);
    } else {
      EXPECT_TRUE(done[i].imputed);
      EXPECT_LT(done[i].y, 4.0);
      EXPECT_LE(done[i].y, p.x);
    }
  }
}

TEST(Impute, PooledGapsFollowTheModel) {
  RngStream data(6, 6), rng(6, 7);
  const ParametricModel m{TruncExp(2.3, 4.95), Gompertz(1.0, 0.5)};
  const auto pairs = testing::model_pairs(m, 3000, 4.0, data);
  const auto done = impute_censored(pairs, m, rng);
  std::vector<double> gaps;
  for (const auto& c : done) gaps.push_back(c.x - c.y);
  EXPECT_GT(ks_test(gaps, [&](double z) { return m.gap.cdf(z); }).p_value, 0.01);
}

TEST(MeanGap, Values) {
  EXPECT_NEAR(mean_gap(Gompertz(1.0, 1.0)), 0.5963473623231946, 1e-9);
  double prev = INFINITY;
  for (double c = 0.01; c < 100.0; c *= 1.5) {
    const double m = mean_gap(Gompertz(1.0, c));
    EXPECT_LT(m, prev);
    prev = m;
  }
  EXPECT_LT(prev, 0.02);
}

TEST(LevelCurve, PointsReevaluate) {
  std::vector<double> grid;
  for (double x = 5.0; x <= 9.0; x += 0.05) grid.push_back(x);
  for (const double p : {1e-3, 1e-4, 1e-5, 1e-6}) {
    const auto c = level_curve_parametric(kModel, p, grid);
    EXPECT_EQ(c.points.size() + c.omitted.size(), grid.size());
    for (const auto& pt : c.points) {
      if (pt.adjusted) continue;
      EXPECT_NEAR(joint_tail_parametric(kModel, pt.x, pt.y), p, 1e-6 * p);
    }
    for (const double x : c.omitted) EXPECT_LT(kModel.margin_x.sf(x), p * (1 + 1e-9));
  }
}

TEST(LevelCurve, NestedAndFlatLeftOfDiagonal) {
  std::vector<double> grid;
  for (double x = 5.0; x <= 6.5; x += 0.05) grid.push_back(x);
  const auto hi = level_curve_parametric(kModel, 1e-4, grid);
  const auto lo = level_curve_parametric(kModel, 1e-5, grid);
  ASSERT_EQ(hi.points.size(), lo.points.size());
  for (std::size_t i = 0; i < hi.points.size(); ++i) {
    EXPECT_LT(hi.points[i].y, lo.points[i].y);
    // With x <= y the event {Y > y} already forces X > x.
    if (lo.points[i].x <= lo.points[0].y) {
      EXPECT_NEAR(lo.points[i].y, lo.points[0].y, 1e-9);
    }
  }
  for (std::size_t i = 1; i < lo.points.size(); ++i) EXPECT_LE(lo.points[i].y, lo.points[i - 1].y);
  EXPECT_THROW(level_curve_parametric(kModel, 0.0, grid), DomainError);
}

TEST(PoissonIdentity, ThinnedZeroClass) {
  // E[(1 - p)^N] = exp(-p lambda) for N ~ Poisson(lambda).
  RngStream rng(10, 10);
  const double p = 0.3, lambda = 2.5;
  const int n = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = std::pow(1.0 - p, static_cast<double>(rng.poisson(lambda)));
    sum += v;
    sum2 += v * v;
  }
  const double m = sum / n;
  EXPECT_NEAR(m, std::exp(-p * lambda), 3.0 * std::sqrt((sum2 / n - m * m) / n));
}

TEST(ParametricGof, Reproducible) {
  RngStream data(11, 1);
  const auto pairs = testing::model_pairs(kModel, 300, 4.0, data);
  const auto fit = fit_parametric(pairs);
  RngStream j1(1, 1), i1(1, 3), j2(1, 1), i2(1, 3);
  const auto a = parametric_gof(pairs, fit.model, j1, i1);
  const auto b = parametric_gof(pairs, fit.model, j2, i2);
  EXPECT_EQ(a.margin_x.statistic, b.margin_x.statistic);
  EXPECT_EQ(a.gap.p_value, b.gap.p_value);
  EXPECT_EQ(a.jittered_gaps, b.jittered_gaps);
  EXPECT_GT(a.gap.p_value, 0.001);
}

}  // namespace
}  // namespace quaketail
