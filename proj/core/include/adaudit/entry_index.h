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

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adaudit/ads_txt.h"
#include "adaudit/sellers_json.h"
#include "adaudit/snapshot.h"

namespace adaudit {

using AccountKey = std::pair<std::string, std::string>;  // (network, id)

// Immutable lookup structures over one sealed snapshot.
class EntryIndex {
 public:
  explicit EntryIndex(std::shared_ptr<const CrawlSnapshot> snapshot);

  const CrawlSnapshot& snapshot() const { return *snapshot_; }
  const std::string& snapshot_id() const { return snapshot_->snapshot_id; }

  const std::map<AccountKey, std::set<std::pair<std::string, AccountType>>>&
  by_account() const {
    return by_account_;
  }
  const std::map<std::string, std::vector<AdsTxtRecord>>& by_publisher() const {
    return by_publisher_;
  }
  // Serving domain -> parsed file (every OK sellers.json fetch).
  const std::map<std::string, SellersFile>& by_network() const {
    return snapshot_->sellers_files;
  }
  // First entry per (serving domain, seller_id).
  const std::map<AccountKey, SellerEntry>& by_seller() const { return by_seller_; }

  size_t record_count() const { return record_count_; }

 private:
  std::shared_ptr<const CrawlSnapshot> snapshot_;
  std::map<AccountKey, std::set<std::pair<std::string, AccountType>>> by_account_;
  std::map<std::string, std::vector<AdsTxtRecord>> by_publisher_;
  std::map<AccountKey, SellerEntry> by_seller_;
  size_t record_count_ = 0;
};

struct AccountLookup {
  std::set<std::string> direct_declarers;
  std::set<std::string> reseller_declarers;
  std::optional<SellerEntry> seller_entry;
};

// Unknown keys yield empty sets and no entry.
AccountLookup LookupAccount(const EntryIndex& index, const std::string& network,
                            const std::string& account_id);

struct CopiedFileGroup {
  ContentHash content_hash;
  std::set<std::string> domains;  // >= 2
  // The file's contact fields name a domain outside the group.
  bool foreign_contact = false;
  // Member whose domain matches the contact email, if any; kept in analysis.
  std::optional<std::string> genuine_owner;
};

// Groups of >= 2 serving domains with byte-identical sellers.json bodies.
// Groups partition their domains. Sorted by hash.
std::vector<CopiedFileGroup> DetectCopiedSellersFiles(const CrawlSnapshot& snapshot);

// Domains excluded from intermediary analysis: every group member except the
// genuine owner.
std::set<std::string> ExcludedCopyDomains(const std::vector<CopiedFileGroup>& groups);

// Domain-like tokens in free text (email domains, bare host names).
std::set<std::string> ExtractDomains(std::string_view text);

}  // namespace adaudit
