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
#include <random>
#include <string>

namespace adaudit::testing {

std::string RandomAdsTxt(std::mt19937_64& rng);
std::string RandomSellersJson(std::mt19937_64& rng);

struct FuzzReport {
  size_t cases = 0;
  size_t valid_cases = 0;  // no ERROR finding, round trip checked
  size_t exceptions = 0;
  size_t roundtrip_failures = 0;
  std::string first_failure;
};

// `cases` inputs split evenly between the two formats.
FuzzReport RunParserFuzz(size_t cases, uint64_t seed);

}  // namespace adaudit::testing
