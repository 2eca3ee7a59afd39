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
#include <vector>

#include "adaudit/findings.h"

namespace adaudit {

enum class AccountType { kDirect, kReseller };

std::string_view AccountTypeName(AccountType t);
// Case-insensitive.
std::optional<AccountType> ParseAccountType(std::string_view s);

// One authorized-seller declaration.
struct AdsTxtRecord {
  std::string ad_system_domain;  // lowercased
  std::string account_id;        // verbatim
  AccountType account_type = AccountType::kDirect;
  std::optional<std::string> cert_authority_id;
  size_t source_line = 0;

  friend bool operator==(const AdsTxtRecord&, const AdsTxtRecord&) = default;
};

struct AdsTxtVariable {
  std::string key;  // lowercased
  std::string value;
  size_t source_line = 0;

  friend bool operator==(const AdsTxtVariable&, const AdsTxtVariable&) = default;
};

struct AdsTxtFile {
  std::string publisher_domain;
  std::vector<AdsTxtRecord> records;
  std::vector<AdsTxtVariable> variables;
  std::vector<ParseFinding> parse_findings;
};

// Never fails: malformed lines become findings, exact duplicates of
// (ad_system_domain, account_id, account_type) keep the first occurrence.
AdsTxtFile ParseAdsTxt(std::string_view publisher_domain, std::string_view text);

// Canonical text form: one `domain, id, TYPE[, cert]` line per record then
// `key=value` per variable. ParseAdsTxt(SerializeAdsTxt(f)) reproduces the
// same records and variables (line numbers aside).
std::string SerializeAdsTxt(const AdsTxtFile& file);

// Replaces invalid UTF-8 sequences with U+FFFD. Returns true if any
// replacement happened.
bool SanitizeUtf8(std::string_view in, std::string& out);

}  // namespace adaudit
