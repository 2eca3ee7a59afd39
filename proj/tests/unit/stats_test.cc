/*
 * Copyright 2026 The adaudit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "adaudit/stats.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

namespace adaudit {
namespace {

TEST(Ks, IdenticalSamplesHaveZeroStatistic) {
  std::vector<double> a = {1, 2, 3, 4, 5};
  auto r = KsTwoSample(a, a);
  EXPECT_DOUBLE_EQ(r.statistic, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(Ks, DisjointSamplesHaveUnitStatistic) {
  std::vector<double> a = {1, 2, 3}, b = {10, 11, 12, 13};
  EXPECT_DOUBLE_EQ(KsTwoSample(a, b).statistic, 1.0);
}

TEST(Ks, TiesAcrossSamples) {
  // ECDF difference evaluated after consuming every tie on both sides.
  std::vector<double> a = {1, 1, 2, 2}, b = {1, 2, 2, 3};
  EXPECT_DOUBLE_EQ(KsTwoSample(a, b).statistic, 0.25);
}

TEST(Ks, RejectsEmptyAndNonFinite) {
  std::vector<double> a = {1}, empty;
  EXPECT_THROW(KsTwoSample(a, empty), StatsError);
  std::vector<double> nan = {std::numeric_limits<double>::quiet_NaN()};
  EXPECT_THROW(KsTwoSample(a, nan), StatsError);
}

TEST(Ks, ExtremeSeparationUnderflowIsFlagged) {
  std::vector<double> a(5000), b(5000);
  for (size_t i = 0; i < a.size(); ++i) {
    a[i] = static_cast<double>(i);
    b[i] = 1e6 + static_cast<double>(i);
  }
  auto r = KsTwoSample(a, b);
  EXPECT_GT(r.p_value, 0.0);
  EXPECT_TRUE(r.underflow);
}

TEST(Kolmogorov, KnownValues) {
  EXPECT_DOUBLE_EQ(KolmogorovSurvival(0), 1.0);
  EXPECT_NEAR(KolmogorovSurvival(1.0), 0.26999967167735456, 1e-12);
  EXPECT_NEAR(KolmogorovSurvival(1.36), 0.049485876755377876, 1e-12);
}

TEST(Pearson, PerfectAndAnticorrelation) {
  std::vector<double> x = {1, 2, 3, 4}, y = {2, 4, 6, 8}, z = {4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(Pearson(x, y).statistic, 1.0);
  EXPECT_DOUBLE_EQ(Pearson(x, y).p_value, 0.0);
  EXPECT_DOUBLE_EQ(Pearson(x, z).statistic, -1.0);
}

TEST(Pearson, RejectsDegenerateInput) {
  std::vector<double> x = {1, 2, 3}, c = {5, 5, 5}, shortv = {1, 2};
  EXPECT_THROW(Pearson(x, c), StatsError);
  EXPECT_THROW(Pearson(shortv, shortv), StatsError);
  EXPECT_THROW(Pearson(x, shortv), StatsError);
}

TEST(Ratio, ReducesAndNormalizesSign) {
  EXPECT_EQ(Ratio::Of(6, 4), (Ratio{3, 2}));
  EXPECT_EQ(Ratio::Of(3, -6), (Ratio{-1, 2}));
  EXPECT_EQ(Ratio::Of(0, 5), (Ratio{0, 1}));
  EXPECT_EQ(Ratio::Of(8, 2).ToString(), "4");
  EXPECT_EQ(Ratio::Of(7, 2).ToString(), "7/2");
  EXPECT_THROW(Ratio::Of(1, 0), StatsError);
}

}  // namespace
}  // namespace adaudit
