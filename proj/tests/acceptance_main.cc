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

#include <cstdio>
#include <exception>
#include <string>

#include "checks.h"

// Prints one PASS/FAIL line per acceptance criterion. Exits non-zero when any
// criterion fails. Optional argument: run only the named criterion.
int main(int argc, char** argv) {
  std::string only = argc > 1 ? argv[1] : "";
  int failed = 0;
  for (const auto& c : adaudit::testing::AcceptanceCriteria()) {
    if (!only.empty() && c.name != only) continue;
    adaudit::testing::CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %-26s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", c.name.c_str(),
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
