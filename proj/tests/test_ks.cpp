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
#include <vector>

#include "quaketail/distributions.hpp"
#include "quaketail/error.hpp"
#include "quaketail/ks.hpp"

namespace quaketail {
namespace {

TEST(Kolmogorov, KnownValues) {
  EXPECT_NEAR(kolmogorov_sf(1.3580986393225507), 0.05, 1e-9);
  EXPECT_NEAR(kolmogorov_sf(1.2238478702170823), 0.10, 1e-9);
  EXPECT_NEAR(kolmogorov_sf(0.8275735551899077), 0.50, 1e-9);
  EXPECT_EQ(kolmogorov_sf(0.0), 1.0);
  EXPECT_LT(kolmogorov_sf(5.0), 1e-20);
}

TEST(Kolmogorov, BranchesAgreeAndMonotone) {
  EXPECT_NEAR(kolmogorov_sf(0.5 - 1e-12), kolmogorov_sf(0.5 + 1e-12), 1e-10);
  double prev = 1.0;
  for (double x = 0.01; x < 4.0; x += 0.01) {
    const double v = kolmogorov_sf(x);
    EXPECT_LE(v, prev + 1e-15);
    EXPECT_GE(v, 0.0);
    prev = v;
  }
}

TEST(KsTest, SinglePointAtMedian) {
  const std::vector<double> xs = {0.0};
  const auto r = ks_test(xs, [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); });
  EXPECT_NEAR(r.statistic, 0.5, 1e-15);
  EXPECT_EQ(r.n, 1u);
}

TEST(KsTest, TotalSeparation) {
  std::vector<double> xs(1000);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 100.0 + static_cast<double>(i);
  const TruncExp d(1.0, 0.0);
  const auto r = ks_test(xs, [&](double x) { return d.cdf(x); });
  EXPECT_NEAR(r.statistic, 1.0, 1e-12);
  EXPECT_LT(r.p_value, 1e-100);
}

TEST(KsTest, Empty) {
  EXPECT_THROW(ks_test(std::vector<double>{}, [](double) { return 0.5; }), DomainError);
}

TEST(KsTest, CalibratedUnderNull) {
  const TruncExp d(2.3, 4.95);
  int rejected = 0;
  std::vector<double> xs(10000);
  for (int rep = 0; rep < 200; ++rep) {
    RngStream rng(100, static_cast<std::uint64_t>(rep));
    for (auto& x : xs) x = d.sample(rng);
    rejected += ks_test(xs, [&](double x) { return d.cdf(x); }).p_value < 0.1;
  }
  const double frac = rejected / 200.0;
  EXPECT_GE(frac, 0.05);
  EXPECT_LE(frac, 0.17);
}

}  // namespace
}  // namespace quaketail
