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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adaudit/time_util.h"

namespace adaudit {

struct WhoisRecord {
  std::string domain;
  std::string raw_text;
  std::optional<std::string> registrant_org;
  Timestamp fetched_at{};
  bool retrieved = false;
};

enum class OwnerStatus { kResolved, kRedacted, kUnparseable, kTooShort, kMissing };
std::string_view OwnerStatusName(OwnerStatus s);
std::optional<OwnerStatus> ParseOwnerStatus(std::string_view s);

struct OwnerResolution {
  std::string domain;
  OwnerStatus status = OwnerStatus::kMissing;
  std::optional<std::string> normalized_org;  // iff kResolved

  friend bool operator==(const OwnerResolution&, const OwnerResolution&) = default;
};

struct PrivacyKeywordList {
  std::vector<std::string> keywords;  // lowercase substrings
};

// One phrase per line, '#' comments; phrases are lowercased and
// whitespace-collapsed. Throws std::runtime_error when unreadable.
PrivacyKeywordList LoadPrivacyKeywords(const std::filesystem::path& path);

// Built-in list matching data/privacy_keywords.txt.
const PrivacyKeywordList& DefaultPrivacyKeywords();

// Lowercase keys (after whitespace collapse) that name the registrant
// organization, in no particular priority; the first matching line wins.
const std::vector<std::string>& DefaultRegistrantKeys();

// Scans `Key: value` lines for a registrant-organization key. A key with an
// empty value takes the next non-empty indented line (Nominet style), and a
// `[Registrant]` section header is honored (JPRS style).
std::optional<std::string> ParseWhois(
    std::string_view raw,
    const std::vector<std::string>& keys = DefaultRegistrantKeys());

// The lines describing the registrant: keys starting with "registrant" plus
// the body of a bare "Registrant:" block.
std::vector<std::string> RegistrantBlock(std::string_view raw);

// Lowercase, trim, collapse internal whitespace runs to one space.
std::string NormalizeOrg(std::string_view org);

// Pure function of (record, keywords).
OwnerResolution ResolveOwner(const WhoisRecord& record,
                             const PrivacyKeywordList& keywords);

// WHOIS access mirrors the fetch transport: fixture directories for tests and
// acceptance, a port-43 client for live use.
class WhoisSource {
 public:
  virtual ~WhoisSource() = default;
  virtual WhoisRecord Lookup(const std::string& domain) = 0;
};

// Reads <dir>/<domain>.txt.
class FixtureWhoisSource : public WhoisSource {
 public:
  explicit FixtureWhoisSource(std::filesystem::path dir);
  WhoisRecord Lookup(const std::string& domain) override;

 private:
  std::filesystem::path dir_;
};

// Queries whois.iana.org for the TLD referral, then the referred server.
class LiveWhoisSource : public WhoisSource {
 public:
  explicit LiveWhoisSource(std::chrono::milliseconds timeout =
                               std::chrono::milliseconds(10000));
  WhoisRecord Lookup(const std::string& domain) override;

 private:
  std::chrono::milliseconds timeout_;
};

// Resolves every domain through `source`.
std::map<std::string, OwnerResolution> ResolveOwners(
    const std::vector<std::string>& domains, WhoisSource& source,
    const PrivacyKeywordList& keywords);

}  // namespace adaudit
