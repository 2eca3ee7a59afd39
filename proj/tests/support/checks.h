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

#include <functional>
#include <string>
#include <vector>

namespace adaudit::testing {

struct CheckResult {
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  std::string name;
  std::function<CheckResult()> run;
};

// One entry per acceptance criterion, in the documented order.
const std::vector<Criterion>& AcceptanceCriteria();

CheckResult CheckPoolingCorpus();
CheckResult CheckIntermediaryCorpus();
CheckResult CheckTemporalDiff();
CheckResult CheckStatisticsOracles();
CheckResult CheckDarkPoolOracle();
CheckResult CheckParserTotality();
CheckResult CheckCrawlerContract();
CheckResult CheckEndToEnd();

}  // namespace adaudit::testing
