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
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adaudit/blob_store.h"
#include "adaudit/snapshot.h"

struct sqlite3;

namespace adaudit {

class StorageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SnapshotNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SnapshotInfo {
  std::string snapshot_id;
  long sequence = 0;  // ingestion order
  Timestamp started_at{};
  Timestamp finished_at{};
  size_t seed_count = 0;
  bool truncated = false;
  size_t file_count = 0;
  size_t failure_count = 0;
};

// Append-only snapshot store: one SQLite file (<data_dir>/adaudit.db) for
// metadata plus content-addressed raw bodies under <data_dir>/blobs.
// Thread-safe; loaded snapshots are immutable and shared.
class Datastore {
 public:
  explicit Datastore(const std::filesystem::path& data_dir);
  ~Datastore();
  Datastore(const Datastore&) = delete;
  Datastore& operator=(const Datastore&) = delete;

  // Stores the snapshot in one transaction and returns its id. Ingesting the
  // same content again is a no-op returning the same id. Throws
  // std::invalid_argument for inconsistent snapshots and StorageError when
  // the write fails (nothing becomes visible).
  std::string Ingest(const CrawlSnapshot& snapshot);

  std::vector<SnapshotInfo> ListSnapshots() const;
  std::optional<std::string> LatestSnapshotId() const;
  bool HasSnapshot(const std::string& id) const;

  // Throws SnapshotNotFound.
  std::shared_ptr<const CrawlSnapshot> LoadSnapshot(const std::string& id) const;

  // Newline-delimited JSON: one object per ads.txt record, seller entry and
  // failure.
  void ExportRecords(const std::string& id, std::ostream& out) const;

  // Materialized analysis payloads keyed by snapshot.
  void SaveAnalysis(const std::string& id, const std::string& payload);
  std::optional<std::string> LoadAnalysis(const std::string& id) const;

  BlobStore& blobs() { return blobs_; }
  const std::filesystem::path& data_dir() const { return data_dir_; }

 private:
  void Exec(const char* sql) const;

  std::filesystem::path data_dir_;
  BlobStore blobs_;
  sqlite3* db_ = nullptr;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const CrawlSnapshot>> cache_;
};

}  // namespace adaudit
