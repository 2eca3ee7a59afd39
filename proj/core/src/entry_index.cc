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

#include "adaudit/entry_index.h"

#include <cctype>

#include "adaudit/domain.h"

namespace adaudit {

EntryIndex::EntryIndex(std::shared_ptr<const CrawlSnapshot> snapshot)
    : snapshot_(std::move(snapshot)) {
  for (const auto& [publisher, file] : snapshot_->ads_files) {
    auto& records = by_publisher_[publisher];
    for (const auto& r : file.records) {
      records.push_back(r);
      by_account_[{r.ad_system_domain, r.account_id}].emplace(publisher,
                                                              r.account_type);
      ++record_count_;
    }
  }
  for (const auto& [network, file] : snapshot_->sellers_files) {
    for (const auto& e : file.entries) {
      by_seller_.try_emplace({network, e.seller_id}, e);
    }
  }
}

AccountLookup LookupAccount(const EntryIndex& index, const std::string& network,
                            const std::string& account_id) {
  AccountLookup out;
  std::string net = NormalizeDomain(network);
  auto it = index.by_account().find({net, account_id});
  if (it != index.by_account().end()) {
    for (const auto& [publisher, type] : it->second) {
      (type == AccountType::kDirect ? out.direct_declarers
                                    : out.reseller_declarers)
          .insert(publisher);
    }
  }
  auto s = index.by_seller().find({net, account_id});
  if (s != index.by_seller().end()) out.seller_entry = s->second;
  return out;
}

std::set<std::string> ExtractDomains(std::string_view text) {
  std::set<std::string> out;
  auto is_host_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.';
  };
  size_t i = 0;
  while (i < text.size()) {
    if (!is_host_char(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && is_host_char(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    while (!token.empty() && (token.back() == '.' || token.back() == '-')) {
      token.remove_suffix(1);
    }
    if (token.find('.') != std::string_view::npos) {
      if (auto d = ParseDomain(token)) {
        // Require an alphabetic TLD so version numbers and IPs are skipped.
        auto tld = d->substr(d->rfind('.') + 1);
        if (std::isalpha(static_cast<unsigned char>(tld.front()))) out.insert(*d);
      }
    }
    i = j;
  }
  return out;
}

std::vector<CopiedFileGroup> DetectCopiedSellersFiles(
    const CrawlSnapshot& snapshot) {
  std::map<ContentHash, std::set<std::string>> by_hash;
  for (const auto& [domain, file] : snapshot.sellers_files) {
    if (!IsStructurallyValid(file)) continue;
    by_hash[file.content_hash].insert(domain);
  }
  std::vector<CopiedFileGroup> out;
  for (auto& [hash, domains] : by_hash) {
    if (domains.size() < 2) continue;
    CopiedFileGroup g;
    g.content_hash = hash;
    g.domains = std::move(domains);
    const SellersFile& file = snapshot.sellers_files.at(*g.domains.begin());
    std::set<std::string> contact_domains;
    std::optional<std::string> email_domain;
    if (file.contact_email) {
      auto at = file.contact_email->rfind('@');
      if (at != std::string::npos) {
        email_domain = ParseDomain(file.contact_email->substr(at + 1));
        if (email_domain) contact_domains.insert(*email_domain);
      }
    }
    if (file.contact_address) {
      auto found = ExtractDomains(*file.contact_address);
      contact_domains.insert(found.begin(), found.end());
    }
    for (const auto& c : contact_domains) {
      bool inside = false;
      for (const auto& d : g.domains) inside = inside || HostWithinDomain(c, d);
      g.foreign_contact = g.foreign_contact || !inside;
    }
    if (email_domain) {
      for (const auto& d : g.domains) {
        if (HostWithinDomain(*email_domain, d)) {
          g.genuine_owner = d;
          break;
        }
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::set<std::string> ExcludedCopyDomains(
    const std::vector<CopiedFileGroup>& groups) {
  std::set<std::string> out;
  for (const auto& g : groups) {
    for (const auto& d : g.domains) {
      if (!g.genuine_owner || *g.genuine_owner != d) out.insert(d);
    }
  }
  return out;
}

}  // namespace adaudit
