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
#include <utility>

#include "adaudit/ads_txt.h"
#include "adaudit/sellers_json.h"
#include "adaudit/time_util.h"
#include "adaudit/transport.h"

namespace adaudit {

class BlobStore;

using FileKey = std::pair<std::string, FileKind>;  // (domain, kind)

// Raw evidence for one successful fetch.
struct FetchedBody {
  std::string url;
  std::optional<std::string> final_url;
  std::string body;
  Timestamp fetched_at{};
};

// One dated crawl. Raw bodies are the source of truth; ads_files and
// sellers_files are their parsed views.
struct CrawlSnapshot {
  std::string snapshot_id;
  Timestamp started_at{};
  Timestamp finished_at{};
  size_t seed_count = 0;
  bool truncated = false;  // max_domains reached

  std::map<FileKey, FetchedBody> bodies;
  std::map<std::string, AdsTxtFile> ads_files;
  std::map<std::string, SellersFile> sellers_files;
  std::map<FileKey, FetchOutcome> failures;
  // sellers.json discovery for every fetched domain, successful or not:
  // domain -> domain whose file listed it ("" for seeds).
  std::map<std::string, std::string> sellers_provenance;

  // Adds a successful fetch and its parsed view.
  void AddBody(const std::string& domain, FileKind kind, FetchedBody body);
  void AddFailure(const std::string& domain, FileKind kind, FetchOutcome outcome);

  // Content digest over bodies and failure statuses, timestamps excluded.
  std::string ComputeId() const;
  void Seal() { snapshot_id = ComputeId(); }

  // Checks the one-slot-per-(domain, kind) rule and provenance chains.
  // Returns an empty string when consistent, else a description.
  std::string CheckConsistency() const;

  // Number of domains on the provenance chain ending at `domain` (1 for a
  // seed), or 0 when `domain` has no provenance.
  size_t ProvenanceDepth(const std::string& domain) const;
};

// Union of two snapshots of disjoint (domain, kind) keys. Identical bodies
// for the same key are accepted; conflicting ones throw std::invalid_argument.
CrawlSnapshot MergeSnapshots(const CrawlSnapshot& a, const CrawlSnapshot& b);

// Staged crawl output: a JSON manifest whose bodies live in a BlobStore.
void SaveStagedSnapshot(const CrawlSnapshot& snapshot, BlobStore& blobs,
                        const std::filesystem::path& manifest_path);
CrawlSnapshot LoadStagedSnapshot(const std::filesystem::path& manifest_path,
                                 const BlobStore& blobs);

}  // namespace adaudit
