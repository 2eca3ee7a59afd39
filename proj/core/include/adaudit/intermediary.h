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
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adaudit/domain_lists.h"
#include "adaudit/relationship_graph.h"
#include "adaudit/stats.h"

namespace adaudit {

struct TypeMismatch {
  std::string network;
  std::string account_id;
  AccountType ads_type = AccountType::kDirect;
  SellerType seller_type = SellerType::kPublisher;
  std::set<std::string> declaring_publishers;
};

// ads.txt keys whose network serves a sellers.json without that id.
struct UnacknowledgedId {
  std::string network;
  std::string account_id;
  AccountType ads_type = AccountType::kDirect;
  std::set<std::string> declaring_publishers;
};

struct MismatchReport {
  std::vector<TypeMismatch> mismatches;
  std::vector<UnacknowledgedId> unacknowledged;
};

// (DIRECT, INTERMEDIARY) and (RESELLER, PUBLISHER) pairs; BOTH matches
// either ads.txt type.
MismatchReport DetectTypeMismatches(const SellersView& view);

struct UnresolvableIntermediary {
  std::string domain;
  size_t listing_count = 0;
};

// INTERMEDIARY subjects whose own sellers.json fetch failed or did not parse.
std::vector<UnresolvableIntermediary> DetectUnresolvableIntermediaries(
    const SellersView& view, const RelationshipGraph& graph);

struct ConfidentialityRow {
  size_t total = 0;
  size_t confidential = 0;
  Ratio fraction;
};

std::map<std::string, ConfidentialityRow> ConfidentialityStats(
    const SellersView& view);

// The four criteria evaluated for one subject.
struct HiddenIntermediaryCriteria {
  bool serves_sellers_json = false;
  bool has_named_client = false;
  bool listed_as_publisher = false;
  bool listed_as_intermediary = false;

  bool AllHold() const {
    return serves_sellers_json && has_named_client && listed_as_publisher &&
           listed_as_intermediary;
  }
};

using Listing = std::pair<std::string, std::string>;  // (issuer, seller_id)

struct HiddenIntermediaryFinding {
  std::string subject;
  std::set<Listing> publisher_listings;     // PUBLISHER or BOTH
  std::set<Listing> intermediary_listings;  // INTERMEDIARY or BOTH
  size_t named_client_count = 0;
  bool verified = false;
  // Publisher-side or intermediary-side evidence is BOTH-typed only.
  bool weak = false;
  std::string snapshot_id;
};

struct HiddenIntermediaryEvaluation {
  HiddenIntermediaryCriteria criteria;
  std::optional<HiddenIntermediaryFinding> finding;
};

HiddenIntermediaryEvaluation EvaluateHiddenIntermediary(
    const SellersView& view, const RelationshipGraph& graph,
    const std::string& subject, const VerifiedNetworkList& verified);

// Every graph node satisfying all criteria, sorted by subject.
std::vector<HiddenIntermediaryFinding> DetectHiddenIntermediaries(
    const SellersView& view, const RelationshipGraph& graph,
    const VerifiedNetworkList& verified);

struct DistributedIdRow {
  std::string issuer;
  std::string seller_id;
  std::string subject_network;
  size_t direct_declarer_count = 0;
};

// PUBLISHER edges (Y, X) where X is a network (serves a sellers.json or is on
// the verified list) and more than `threshold` publishers declare (Y, id) as
// DIRECT. Throws std::invalid_argument when threshold < 2.
std::vector<DistributedIdRow> FlagDistributedPublisherIds(
    const SellersView& view, const RelationshipGraph& graph,
    const VerifiedNetworkList& verified, size_t threshold);

struct IndirectClients {
  std::set<std::string> fake_news;
  std::set<std::string> piracy;
  std::set<std::string> illegal;
};

std::map<std::string, IndirectClients> FindIndirectClients(
    const std::vector<HiddenIntermediaryFinding>& findings,
    const SellersView& view, const ObjectionableLists& lists);

// Findings of one snapshot together with the verified list they used.
struct FindingSet {
  std::string snapshot_id;
  std::string verified_list_digest;
  std::vector<HiddenIntermediaryFinding> findings;
};

struct TemporalDiff {
  std::set<std::string> appeared;
  std::set<std::string> disappeared;
  std::set<std::string> persisted;
  // |publisher_listings| in b minus in a, over subjects in either set.
  std::map<std::string, long> per_subject_listing_delta;

  long NetChange() const {
    return static_cast<long>(appeared.size()) - static_cast<long>(disappeared.size());
  }
};

class NonComparableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Compares verified findings (all findings when `verified_only` is false).
// Throws NonComparableError when the verified lists differ.
TemporalDiff DiffFindings(const FindingSet& a, const FindingSet& b,
                          bool verified_only = true);

}  // namespace adaudit
