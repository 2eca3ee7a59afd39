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

#include "adaudit/content_hash.h"
#include "adaudit/findings.h"

namespace adaudit {

enum class SellerType { kPublisher, kIntermediary, kBoth };

std::string_view SellerTypeName(SellerType t);
// Case-insensitive.
std::optional<SellerType> ParseSellerType(std::string_view s);

struct SellerEntry {
  std::string seller_id;
  std::optional<std::string> name;
  std::optional<std::string> domain;  // lowercased
  SellerType seller_type = SellerType::kPublisher;
  bool is_confidential = false;

  // Non-confidential with a name or a domain.
  bool IsNamed() const { return !is_confidential && (name || domain); }

  friend bool operator==(const SellerEntry&, const SellerEntry&) = default;
};

struct SellersFile {
  std::string serving_domain;
  std::optional<std::string> version;
  std::optional<std::string> contact_email;
  std::optional<std::string> contact_address;
  std::vector<SellerEntry> entries;
  ContentHash content_hash;
  std::vector<ParseFinding> parse_findings;
};

// Never throws. Structurally invalid input yields zero entries and one ERROR
// finding; content_hash is always the digest of `text`.
SellersFile ParseSellersJson(std::string_view serving_domain,
                             std::string_view text);

// False when the body was not JSON or had no sellers array.
bool IsStructurallyValid(const SellersFile& file);

// Single-file rules: duplicate seller_id, under-disclosed non-confidential
// entries, and one domain claimed by non-confidential entries under
// different names.
std::vector<ParseFinding> LintSellersFile(const SellersFile& file);

// Canonical JSON rendering of the parsed content (not the raw bytes).
std::string SerializeSellersJson(const SellersFile& file);

// Reduces a sellers.json `domain` value to a bare lowercase host: strips a
// URL scheme, path, port and trailing dot. Returns nullopt when the result is
// not a valid domain.
std::optional<std::string> NormalizeEntryDomain(std::string_view raw);

}  // namespace adaudit
