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

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace adaudit {

class StatsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StatResult {
  double statistic = 0;
  double p_value = 1;
  // p evaluated to 0 in double precision and was clamped to the smallest
  // positive subnormal.
  bool underflow = false;
};

// sup_x |F_a(x) - F_b(x)| with the p-value from the asymptotic Kolmogorov
// distribution at sqrt(nm/(n+m)) * D. Throws StatsError on empty or
// non-finite input.
StatResult KsTwoSample(std::span<const double> a, std::span<const double> b);

// Survival function of the limiting Kolmogorov distribution,
// P(K > lambda).
double KolmogorovSurvival(double lambda);

// Sample correlation with a two-sided p-value from Student's t with n - 2
// degrees of freedom. Requires equal sizes >= 3 and non-constant inputs.
StatResult Pearson(std::span<const double> xs, std::span<const double> ys);

// Exact non-negative rational, always reduced.
struct Ratio {
  int64_t num = 0;
  int64_t den = 1;

  static Ratio Of(int64_t num, int64_t den);
  double ToDouble() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string ToString() const;  // "7/2" or "4"

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

}  // namespace adaudit
