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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace adaudit {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

Timestamp Now();

// RFC 3339 UTC with millisecond precision, e.g. 2023-10-01T12:00:00.000Z.
std::string FormatTimestamp(Timestamp t);
std::optional<Timestamp> ParseTimestamp(std::string_view s);

}  // namespace adaudit
