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
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adaudit/rate_limiter.h"
#include "adaudit/snapshot.h"
#include "adaudit/transport.h"

namespace adaudit {

struct CrawlConfig {
  std::string user_agent = "adaudit/0.1 (ad transparency research)";
  std::chrono::milliseconds timeout{10000};
  int max_redirects = 3;
  int max_recursion_depth = 5;
  size_t max_domains = 1000000;
  std::chrono::milliseconds per_host_delay{0};
  // Domains whose sellers.json lives somewhere other than the default path,
  // e.g. google.com -> https://realtimebidding.google.com/sellers.json.
  std::map<std::string, std::string> sellers_path_aliases;
  size_t workers = 8;

  // Throws CrawlConfigError on invalid values.
  void Validate() const;
};

class CrawlConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The URL a crawl requests for (domain, kind), honoring the alias map.
std::string RequestUrl(const CrawlConfig& config, const std::string& domain,
                       FileKind kind);

// Fetches https://<seed>/ads.txt once per distinct seed. Per-domain failures
// are recorded; only invalid configuration or seeds throw.
CrawlSnapshot CrawlAdsTxt(const std::vector<std::string>& seeds,
                          const CrawlConfig& config, Transport& transport,
                          std::shared_ptr<PolitenessLimiter> limiter = nullptr);

// Breadth-first sellers.json expansion: every distinct entry domain of every
// fetched file is enqueued once, bounded by max_recursion_depth and
// max_domains.
CrawlSnapshot CrawlSellersRecursive(
    const std::vector<std::string>& seeds, const CrawlConfig& config,
    Transport& transport, std::shared_ptr<PolitenessLimiter> limiter = nullptr);

struct LiveFetchResult {
  FetchOutcome outcome;
  std::optional<AdsTxtFile> ads_txt;
  std::optional<SellersFile> sellers_json;
};

// Single fetch and parse; nothing is persisted.
LiveFetchResult LiveFetchPassthrough(const std::string& domain, FileKind kind,
                                     const CrawlConfig& config,
                                     Transport& transport,
                                     PolitenessLimiter* limiter = nullptr);

struct SeedList {
  std::vector<std::string> domains;
  size_t skipped = 0;
};

// Tranco-style `rank,domain` CSV or one domain per line; '#' comments and
// invalid domains are skipped and counted. Throws std::runtime_error when the
// file is unreadable.
SeedList LoadSeedList(const std::filesystem::path& path);

// Parses `domain url` or `domain,url` lines.
std::map<std::string, std::string> LoadAliasMap(const std::filesystem::path& path);

}  // namespace adaudit
