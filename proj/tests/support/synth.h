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
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "adaudit/domain_lists.h"
#include "adaudit/snapshot.h"
#include "adaudit/whois.h"

namespace adaudit::testing {

// Assembles a sealed snapshot from literal file bodies.
class SnapshotBuilder {
 public:
  SnapshotBuilder& Ads(const std::string& domain, const std::string& text);
  SnapshotBuilder& Sellers(const std::string& domain, const std::string& text);
  SnapshotBuilder& Failure(const std::string& domain, FileKind kind, FetchStatus status);
  CrawlSnapshot Take();
  std::shared_ptr<const CrawlSnapshot> Build();

 private:
  CrawlSnapshot snap_;
};

struct SellerSpec {
  std::string seller_id;
  std::string seller_type;  // PUBLISHER / INTERMEDIARY / BOTH
  std::string domain;       // empty = absent
  std::string name;         // empty = absent
  bool confidential = false;
};

// Hand-rolled sellers.json text (independent of the library serializer).
std::string SellersText(const std::vector<SellerSpec>& entries,
                        const std::string& contact_email = "");

// Ground truth for a random ads.txt corpus.
struct AdsRecordTruth {
  std::string publisher;
  std::string network;
  std::string account_id;
  bool direct = true;
  auto operator<=>(const AdsRecordTruth&) const = default;
};

struct RandomAdsCorpus {
  std::shared_ptr<const CrawlSnapshot> snapshot;
  std::set<AdsRecordTruth> records;
  std::vector<std::string> publishers;
};

// Small id spaces so that pools form often.
RandomAdsCorpus GenerateAdsCorpus(std::mt19937_64& rng);

// Random owner resolutions for every publisher; some are left out entirely.
std::map<std::string, OwnerResolution> GenerateOwners(
    std::mt19937_64& rng, const std::vector<std::string>& publishers);

struct RandomSellersGraph {
  std::shared_ptr<const CrawlSnapshot> snapshot;
  VerifiedNetworkList verified;
};

// Networks listing each other with random types, some confidential entries,
// some networks without a file.
RandomSellersGraph GenerateSellersGraph(std::mt19937_64& rng);

// Snapshot whose hidden intermediaries are exactly `verified_subjects` (on the
// returned list) plus `unverified_subjects` (not on it).
struct TemporalFixture {
  std::shared_ptr<const CrawlSnapshot> snapshot;
  VerifiedNetworkList verified;
};
TemporalFixture BuildTemporalFixture(const std::vector<std::string>& verified_subjects,
                                     const std::vector<std::string>& unverified_subjects,
                                     const std::vector<std::string>& verified_list);

}  // namespace adaudit::testing
