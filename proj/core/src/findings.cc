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

#include "adaudit/findings.h"

#include <algorithm>
#include <array>
#include <utility>

namespace adaudit {

namespace {

constexpr std::array<std::pair<FindingCode, std::string_view>, 20> kCodeNames{{
    {FindingCode::kInvalidUtf8, "invalid_utf8"},
    {FindingCode::kMalformedLine, "malformed_line"},
    {FindingCode::kEmptyField, "empty_field"},
    {FindingCode::kInvalidAdSystemDomain, "invalid_ad_system_domain"},
    {FindingCode::kAdSystemNotDomain, "ad_system_not_domain"},
    {FindingCode::kInvalidAccountType, "invalid_account_type"},
    {FindingCode::kExtraFields, "extra_fields"},
    {FindingCode::kDuplicateRecord, "duplicate_record"},
    {FindingCode::kUnknownVariable, "unknown_variable"},
    {FindingCode::kInvalidJson, "invalid_json"},
    {FindingCode::kMissingSellersArray, "missing_sellers_array"},
    {FindingCode::kEntryNotObject, "entry_not_object"},
    {FindingCode::kMissingSellerId, "missing_seller_id"},
    {FindingCode::kMissingSellerType, "missing_seller_type"},
    {FindingCode::kInvalidSellerType, "invalid_seller_type"},
    {FindingCode::kNonStringField, "non_string_field"},
    {FindingCode::kInvalidEntryDomain, "invalid_entry_domain"},
    {FindingCode::kDuplicateSellerId, "duplicate_seller_id"},
    {FindingCode::kUnderDisclosed, "under_disclosed"},
    {FindingCode::kMultiClaimDomain, "multi_claim_domain"},
}};

}  // namespace

std::string_view FindingCodeName(FindingCode code) {
  for (const auto& [c, name] : kCodeNames) {
    if (c == code) return name;
  }
  return "unknown";
}

std::optional<FindingCode> FindingCodeFromName(std::string_view name) {
  for (const auto& [c, n] : kCodeNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string_view SeverityName(Severity s) {
  return s == Severity::kError ? "ERROR" : "WARN";
}

std::string SourceLocation::ToString() const {
  switch (kind) {
    case Kind::kFile:
      return "file";
    case Kind::kLine:
      return "line " + std::to_string(index);
    case Kind::kEntry:
      return "entry " + std::to_string(index);
  }
  return "file";
}

bool HasErrors(const std::vector<ParseFinding>& findings) {
  return std::any_of(findings.begin(), findings.end(), [](const auto& f) {
    return f.severity == Severity::kError;
  });
}

}  // namespace adaudit
