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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

namespace adaudit {

namespace {

void CheckFinite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw StatsError(std::string(what) + " has non-finite values");
  }
}

StatResult Saturate(double statistic, double p) {
  StatResult r;
  r.statistic = statistic;
  if (p <= 0) {
    r.p_value = std::numeric_limits<double>::denorm_min();
    r.underflow = true;
  } else {
    r.p_value = std::min(p, 1.0);
  }
  return r;
}

}  // namespace

double KolmogorovSurvival(double lambda) {
  if (!(lambda > 0)) return 1.0;
  if (lambda < 1.18) {
    // Jacobi theta form converges fast for small lambda.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double w = pi2 / (8 * lambda * lambda);
    double sum = 0;
    for (int k = 1; k <= 20; ++k) {
      double term = std::exp(-(2.0 * k - 1) * (2.0 * k - 1) * w);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    double cdf = std::sqrt(2 * std::numbers::pi) / lambda * sum;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0;
  for (int k = 1; k <= 100; ++k) {
    double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
    if (term == 0 || term < 1e-17 * std::abs(sum)) break;
  }
  return std::clamp(2 * sum, 0.0, 1.0);
}

StatResult KsTwoSample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw StatsError("KS test needs two non-empty samples");
  CheckFinite(a, "first sample");
  CheckFinite(b, "second sample");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double n = static_cast<double>(sa.size());
  const double m = static_cast<double>(sb.size());

  // Walk the merged support; at each distinct value both ECDFs include every
  // tied observation.
  size_t i = 0, j = 0;
  double d = 0;
  while (i < sa.size() || j < sb.size()) {
    double x = (j >= sb.size() || (i < sa.size() && sa[i] <= sb[j])) ? sa[i] : sb[j];
    while (i < sa.size() && sa[i] <= x) ++i;
    while (j < sb.size() && sb[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  const double en = n * m / (n + m);
  return Saturate(d, KolmogorovSurvival(std::sqrt(en) * d));
}

StatResult Pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw StatsError("Pearson inputs differ in length");
  if (xs.size() < 3) throw StatsError("Pearson needs at least 3 pairs");
  CheckFinite(xs, "xs");
  CheckFinite(ys, "ys");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx;
    double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw StatsError("Pearson undefined for constant input");
  double r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  const double df = n - 2;
  double p = 0;
  if (std::abs(r) < 1) {
    p = boost::math::ibeta(df / 2, 0.5, (1 - r) * (1 + r));
  }
  return Saturate(r, p);
}

Ratio Ratio::Of(int64_t num, int64_t den) {
  if (den == 0) throw StatsError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) return Ratio{0, 1};
  return Ratio{num / g, den / g};
}

std::string Ratio::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace adaudit
