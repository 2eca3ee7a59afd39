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
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adaudit/analysis_context.h"
#include "adaudit/crawler.h"
#include "adaudit/datastore.h"
#include "adaudit/rate_limiter.h"
#include "adaudit/transport.h"

namespace adaudit {

enum class ApiStatus { kOk, kNotFound, kInvalidInput, kUpstreamError };

std::string_view ApiStatusName(ApiStatus s);

struct ApiRequest {
  std::string method = "GET";
  std::string path;
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;  // lowercase names
  std::string body;
  std::string client;  // remote address, used for rate limiting
};

struct ApiResponse {
  int http_status = 200;
  ApiStatus status = ApiStatus::kOk;
  std::string body;  // JSON envelope
};

struct PartnershipResult {
  std::string query_domain;
  // partner -> shared (network, account_id) keys, both sides DIRECT
  std::map<std::string, std::set<AccountKey>> partners;
};

PartnershipResult FindPartnerships(const EntryIndex& index,
                                   const std::string& domain);

struct ClaimedNetwork {
  std::string network;
  std::string account_id;
  AccountType ads_type = AccountType::kDirect;
  auto operator<=>(const ClaimedNetwork&) const = default;
};

struct AcknowledgingNetwork {
  std::string network;
  std::string seller_id;
  SellerType seller_type = SellerType::kPublisher;
  auto operator<=>(const AcknowledgingNetwork&) const = default;
};

struct RelationshipResult {
  std::string domain;
  std::vector<ClaimedNetwork> claimed_networks;            // sorted, unique
  std::vector<AcknowledgingNetwork> acknowledging_networks;  // sorted, unique
};

RelationshipResult FindRelationships(const EntryIndex& index,
                                     const RelationshipGraph& graph,
                                     const std::string& domain);

struct QueryServiceOptions {
  // Analysis inputs used when a snapshot's context is first built. Owner
  // resolutions are taken from the materialized analysis when one exists.
  AnalysisInputs inputs;
  // Empty disables the admin endpoints.
  std::string admin_token;
  // Null disables /fetch (UPSTREAM_ERROR).
  std::shared_ptr<Transport> fetch_transport;
  CrawlConfig fetch_config;
  std::shared_ptr<PolitenessLimiter> politeness;
  double fetch_burst = 5;
  double fetch_per_second = 1;
  SteadyClockFn clock;
  size_t stats_top_n = 10;
};

// Transport-independent handler for the /api/v1 surface. Thread-safe.
class QueryService {
 public:
  QueryService(Datastore& store, QueryServiceOptions options);

  ApiResponse Handle(const ApiRequest& request);

  // Context for a snapshot (built on first use); throws SnapshotNotFound.
  std::shared_ptr<const AnalysisContext> Context(const std::string& snapshot_id);

  // Runs the analysis and stores the materialized document; returns it.
  std::string Analyze(const std::string& snapshot_id);

 private:
  ApiResponse Dispatch(const ApiRequest& req);
  ApiResponse Pooling(const ApiRequest& req, const std::vector<std::string>& parts);
  ApiResponse Hidden(const ApiRequest& req, const std::vector<std::string>& parts);
  ApiResponse Partnerships(const ApiRequest& req, const std::vector<std::string>& parts);
  ApiResponse Relationships(const ApiRequest& req, const std::vector<std::string>& parts);
  ApiResponse Fetch(const ApiRequest& req, const std::vector<std::string>& parts);
  ApiResponse Stats(const ApiRequest& req);
  ApiResponse AdminIngest(const ApiRequest& req);
  ApiResponse AdminAnalyze(const ApiRequest& req);
  bool Authorized(const ApiRequest& req) const;
  std::optional<std::string> SelectSnapshot(const ApiRequest& req) const;

  Datastore& store_;
  QueryServiceOptions options_;
  TokenBucketLimiter client_limiter_;
  TokenBucketLimiter target_limiter_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const AnalysisContext>> contexts_;
};

}  // namespace adaudit
