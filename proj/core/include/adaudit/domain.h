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

#include <optional>
#include <string>
#include <string_view>

namespace adaudit {

// Lowercases ASCII, trims surrounding whitespace and a single trailing dot.
// Does not validate.
std::string NormalizeDomain(std::string_view raw);

// Hostname syntax check on an already-normalized domain: at least two
// dot-separated labels of [a-z0-9-], no label starting or ending with '-',
// labels 1..63 chars, total length <= 253.
bool IsValidDomain(std::string_view normalized);

// NormalizeDomain + IsValidDomain. Returns nullopt when the result is not a
// syntactically valid domain.
std::optional<std::string> ParseDomain(std::string_view raw);

// Lowercase ASCII copy.
std::string AsciiLower(std::string_view s);

// Strips ASCII whitespace from both ends.
std::string_view TrimWhitespace(std::string_view s);

bool ContainsWhitespace(std::string_view s);

// Case-insensitive ASCII equality.
bool EqualsIgnoreCase(std::string_view a, std::string_view b);

// Returns true when `host` equals `domain` or is a subdomain of it.
bool HostWithinDomain(std::string_view host, std::string_view domain);

}  // namespace adaudit
