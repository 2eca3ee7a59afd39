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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adaudit {

enum class Severity { kWarn, kError };

// Closed set of finding codes. Keep FindingCodeName() and the table in
// docs/findings.md in sync when adding a value.
enum class FindingCode {
  // ads.txt
  kInvalidUtf8,
  kMalformedLine,
  kEmptyField,
  kInvalidAdSystemDomain,
  kAdSystemNotDomain,
  kInvalidAccountType,
  kExtraFields,
  kDuplicateRecord,
  kUnknownVariable,
  // sellers.json
  kInvalidJson,
  kMissingSellersArray,
  kEntryNotObject,
  kMissingSellerId,
  kMissingSellerType,
  kInvalidSellerType,
  kNonStringField,
  kInvalidEntryDomain,
  // sellers.json lint
  kDuplicateSellerId,
  kUnderDisclosed,
  kMultiClaimDomain,
};

std::string_view FindingCodeName(FindingCode code);
std::optional<FindingCode> FindingCodeFromName(std::string_view name);
std::string_view SeverityName(Severity s);

struct SourceLocation {
  enum class Kind { kFile, kLine, kEntry };
  Kind kind = Kind::kFile;
  // 1-based line for kLine, 0-based sellers array index for kEntry.
  size_t index = 0;

  static SourceLocation File() { return {}; }
  static SourceLocation Line(size_t line) { return {Kind::kLine, line}; }
  static SourceLocation Entry(size_t i) { return {Kind::kEntry, i}; }

  std::string ToString() const;
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct ParseFinding {
  Severity severity = Severity::kWarn;
  FindingCode code = FindingCode::kMalformedLine;
  std::string message;
  SourceLocation location;
  // Entry indices involved in multi-entry findings (duplicates, multi-claims).
  std::vector<size_t> related_entries;

  friend bool operator==(const ParseFinding&, const ParseFinding&) = default;
};

bool HasErrors(const std::vector<ParseFinding>& findings);

}  // namespace adaudit
