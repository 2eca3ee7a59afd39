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
#include <string>
#include <vector>

#include "adaudit/domain_lists.h"
#include "adaudit/entry_index.h"
#include "adaudit/intermediary.h"
#include "adaudit/pooling.h"
#include "adaudit/relationship_graph.h"
#include "adaudit/reports.h"
#include "adaudit/whois.h"

namespace adaudit {

struct AnalysisInputs {
  VerifiedNetworkList verified;
  ObjectionableLists objectionable;
  RankTable ranks;
  // Precomputed owner resolutions; pool members missing here are looked up
  // through `whois` when it is set.
  std::map<std::string, OwnerResolution> owners;
  WhoisSource* whois = nullptr;
  PrivacyKeywordList privacy_keywords;
  size_t distributed_id_threshold = 10;
  size_t overused_id_threshold = 2;
  bool exclude_copied_files = true;
};

// Every analysis output for one sealed snapshot. Immutable once built and
// shared between request handlers.
class AnalysisContext {
 public:
  static std::shared_ptr<const AnalysisContext> Build(
      std::shared_ptr<const CrawlSnapshot> snapshot, const AnalysisInputs& inputs);

  AnalysisContext(const AnalysisContext&) = delete;
  AnalysisContext& operator=(const AnalysisContext&) = delete;

  const std::string& snapshot_id() const { return snapshot_->snapshot_id; }
  const CrawlSnapshot& snapshot() const { return *snapshot_; }
  const EntryIndex& index() const { return index_; }
  const SellersView& view() const { return view_; }
  const RelationshipGraph& graph() const { return graph_; }
  const VerifiedNetworkList& verified() const { return verified_; }

  const std::vector<Pool>& pools() const { return pools_; }
  const PoolStats& pool_stats() const { return pool_stats_; }
  const std::map<std::string, OwnerResolution>& owners() const { return owners_; }
  const std::vector<DarkPool>& dark_pools() const { return dark_pools_; }
  const std::vector<OverusedIdRow>& overused_ids() const { return overused_; }
  const FlowGraph& flows() const { return flows_; }

  const MismatchReport& mismatches() const { return mismatches_; }
  const std::vector<UnresolvableIntermediary>& unresolvable() const {
    return unresolvable_;
  }
  const std::map<std::string, ConfidentialityRow>& confidentiality() const {
    return confidentiality_;
  }
  const std::vector<HiddenIntermediaryFinding>& hidden_intermediaries() const {
    return hidden_;
  }
  const std::vector<DistributedIdRow>& distributed_ids() const {
    return distributed_;
  }
  const std::map<std::string, IndirectClients>& indirect_clients() const {
    return indirect_;
  }

  size_t VerifiedFindingCount() const;
  FindingSet Findings() const;

 private:
  AnalysisContext(std::shared_ptr<const CrawlSnapshot> snapshot,
                  const AnalysisInputs& inputs);

  std::shared_ptr<const CrawlSnapshot> snapshot_;
  EntryIndex index_;
  SellersView view_;
  RelationshipGraph graph_;
  VerifiedNetworkList verified_;
  std::vector<Pool> pools_;
  PoolStats pool_stats_;
  std::map<std::string, OwnerResolution> owners_;
  std::vector<DarkPool> dark_pools_;
  std::vector<OverusedIdRow> overused_;
  FlowGraph flows_;
  MismatchReport mismatches_;
  std::vector<UnresolvableIntermediary> unresolvable_;
  std::map<std::string, ConfidentialityRow> confidentiality_;
  std::vector<HiddenIntermediaryFinding> hidden_;
  std::vector<DistributedIdRow> distributed_;
  std::map<std::string, IndirectClients> indirect_;
};

// Corpus-level aggregates shared by the stats endpoint and `analyze`.
struct CorpusCounts {
  size_t seed_count = 0;
  size_t ads_txt_files = 0;
  size_t sellers_json_files = 0;
  size_t ads_txt_records = 0;
  size_t seller_entries = 0;
  size_t fetch_failures = 0;
  size_t pool_count = 0;
  size_t dark_pool_count = 0;
  size_t mismatch_count = 0;
  size_t unacknowledged_count = 0;
  size_t hidden_intermediary_count = 0;
  size_t verified_hidden_intermediary_count = 0;
  size_t copied_file_groups = 0;
};

CorpusCounts CountCorpus(const AnalysisContext& ctx);

// Deterministic JSON document holding every report table, the corpus counts,
// the owner resolutions and the findings. Contains no wall-clock time, so
// analyzing one snapshot twice yields identical bytes.
std::string MaterializeAnalysis(const AnalysisContext& ctx);

// Pieces read back from a materialized document. Throw std::runtime_error on
// malformed input.
std::map<std::string, OwnerResolution> OwnersFromAnalysis(const std::string& doc);
FindingSet FindingsFromAnalysis(const std::string& doc);
size_t VerifiedCountFromAnalysis(const std::string& doc);
ReportTable ReportFromAnalysis(const std::string& doc, ReportKind kind);

}  // namespace adaudit
