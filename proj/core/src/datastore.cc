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

#include "adaudit/datastore.h"

#include <sqlite3.h>

#include "json.hpp"

namespace adaudit {

namespace {

using nlohmann::json;

class Statement {
 public:
  Statement(sqlite3* db, const char* sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
      throw StorageError(std::string("prepare failed: ") + sqlite3_errmsg(db));
    }
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  Statement& Bind(int i, const std::string& v) {
    Check(sqlite3_bind_text(stmt_, i, v.data(), static_cast<int>(v.size()),
                            SQLITE_TRANSIENT));
    return *this;
  }
  Statement& Bind(int i, const std::optional<std::string>& v) {
    if (!v) {
      Check(sqlite3_bind_null(stmt_, i));
      return *this;
    }
    return Bind(i, *v);
  }
  Statement& Bind(int i, long long v) {
    Check(sqlite3_bind_int64(stmt_, i, v));
    return *this;
  }

  // True while rows remain.
  bool Step() {
    int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    throw StorageError(std::string("step failed: ") + sqlite3_errmsg(db_));
  }
  void Run() {
    while (Step()) {
    }
  }

  std::string Text(int col) const {
    auto* p = sqlite3_column_text(stmt_, col);
    return p ? std::string(reinterpret_cast<const char*>(p),
                           static_cast<size_t>(sqlite3_column_bytes(stmt_, col)))
             : std::string();
  }
  std::optional<std::string> OptText(int col) const {
    if (sqlite3_column_type(stmt_, col) == SQLITE_NULL) return std::nullopt;
    return Text(col);
  }
  long long Int(int col) const { return sqlite3_column_int64(stmt_, col); }

 private:
  void Check(int rc) {
    if (rc != SQLITE_OK) {
      throw StorageError(std::string("bind failed: ") + sqlite3_errmsg(db_));
    }
  }
  sqlite3* db_;
  sqlite3_stmt* stmt_ = nullptr;
};

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS snapshots (
  id TEXT PRIMARY KEY,
  seq INTEGER NOT NULL UNIQUE,
  started_at TEXT NOT NULL,
  finished_at TEXT NOT NULL,
  seed_count INTEGER NOT NULL,
  truncated INTEGER NOT NULL,
  ingested_at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS files (
  snapshot_id TEXT NOT NULL REFERENCES snapshots(id),
  kind TEXT NOT NULL,
  domain TEXT NOT NULL,
  url TEXT NOT NULL,
  final_url TEXT,
  fetched_at TEXT NOT NULL,
  blob TEXT NOT NULL,
  PRIMARY KEY (snapshot_id, kind, domain)
);
CREATE TABLE IF NOT EXISTS failures (
  snapshot_id TEXT NOT NULL REFERENCES snapshots(id),
  kind TEXT NOT NULL,
  domain TEXT NOT NULL,
  url TEXT NOT NULL,
  status TEXT NOT NULL,
  final_url TEXT,
  fetched_at TEXT NOT NULL,
  detail TEXT NOT NULL,
  PRIMARY KEY (snapshot_id, kind, domain)
);
CREATE TABLE IF NOT EXISTS provenance (
  snapshot_id TEXT NOT NULL REFERENCES snapshots(id),
  domain TEXT NOT NULL,
  parent TEXT NOT NULL,
  PRIMARY KEY (snapshot_id, domain)
);
CREATE TABLE IF NOT EXISTS analysis (
  snapshot_id TEXT PRIMARY KEY REFERENCES snapshots(id),
  payload TEXT NOT NULL,
  updated_at TEXT NOT NULL
);
)sql";

}  // namespace

Datastore::Datastore(const std::filesystem::path& data_dir)
    : data_dir_(data_dir), blobs_((std::filesystem::create_directories(data_dir),
                                   data_dir / "blobs")) {
  auto db_path = (data_dir_ / "adaudit.db").string();
  if (sqlite3_open_v2(db_path.c_str(), &db_,
                      SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE |
                          SQLITE_OPEN_FULLMUTEX,
                      nullptr) != SQLITE_OK) {
    std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
    sqlite3_close(db_);
    throw StorageError("cannot open " + db_path + ": " + msg);
  }
  sqlite3_busy_timeout(db_, 5000);
  Exec("PRAGMA journal_mode=WAL;");
  Exec("PRAGMA foreign_keys=ON;");
  Exec(kSchema);
}

Datastore::~Datastore() { sqlite3_close(db_); }

void Datastore::Exec(const char* sql) const {
  char* err = nullptr;
  if (sqlite3_exec(db_, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw StorageError(msg);
  }
}

std::string Datastore::Ingest(const CrawlSnapshot& snapshot) {
  if (auto problem = snapshot.CheckConsistency(); !problem.empty()) {
    throw std::invalid_argument("inconsistent snapshot: " + problem);
  }
  const std::string id = snapshot.ComputeId();
  if (!snapshot.snapshot_id.empty() && snapshot.snapshot_id != id) {
    throw std::invalid_argument("snapshot id does not match its content");
  }

  // Blobs are content-addressed; orphans from a failed transaction are
  // harmless and reused by a retry.
  std::vector<std::string> blob_ids;
  blob_ids.reserve(snapshot.bodies.size());
  for (const auto& [key, b] : snapshot.bodies) {
    blob_ids.push_back(blobs_.Put(b.body).Hex());
  }

  std::lock_guard lock(mu_);
  {
    Statement q(db_, "SELECT 1 FROM snapshots WHERE id = ?");
    q.Bind(1, id);
    if (q.Step()) return id;
  }
  Exec("BEGIN IMMEDIATE;");
  try {
    long long seq = 1;
    {
      Statement q(db_, "SELECT COALESCE(MAX(seq), 0) + 1 FROM snapshots");
      if (q.Step()) seq = q.Int(0);
    }
    Statement(db_,
              "INSERT INTO snapshots(id, seq, started_at, finished_at, "
              "seed_count, truncated, ingested_at) VALUES (?,?,?,?,?,?,?)")
        .Bind(1, id)
        .Bind(2, seq)
        .Bind(3, FormatTimestamp(snapshot.started_at))
        .Bind(4, FormatTimestamp(snapshot.finished_at))
        .Bind(5, static_cast<long long>(snapshot.seed_count))
        .Bind(6, static_cast<long long>(snapshot.truncated))
        .Bind(7, FormatTimestamp(Now()))
        .Run();
    size_t i = 0;
    for (const auto& [key, b] : snapshot.bodies) {
      Statement(db_,
                "INSERT INTO files(snapshot_id, kind, domain, url, final_url, "
                "fetched_at, blob) VALUES (?,?,?,?,?,?,?)")
          .Bind(1, id)
          .Bind(2, std::string(FileKindName(key.second)))
          .Bind(3, key.first)
          .Bind(4, b.url)
          .Bind(5, b.final_url)
          .Bind(6, FormatTimestamp(b.fetched_at))
          .Bind(7, blob_ids[i++])
          .Run();
    }
    for (const auto& [key, f] : snapshot.failures) {
      Statement(db_,
                "INSERT INTO failures(snapshot_id, kind, domain, url, status, "
                "final_url, fetched_at, detail) VALUES (?,?,?,?,?,?,?,?)")
          .Bind(1, id)
          .Bind(2, std::string(FileKindName(key.second)))
          .Bind(3, key.first)
          .Bind(4, f.url)
          .Bind(5, std::string(FetchStatusName(f.status)))
          .Bind(6, f.final_url)
          .Bind(7, FormatTimestamp(f.fetched_at))
          .Bind(8, f.detail)
          .Run();
    }
    for (const auto& [domain, parent] : snapshot.sellers_provenance) {
      Statement(db_,
                "INSERT INTO provenance(snapshot_id, domain, parent) "
                "VALUES (?,?,?)")
          .Bind(1, id)
          .Bind(2, domain)
          .Bind(3, parent)
          .Run();
    }
    Exec("COMMIT;");
  } catch (...) {
    sqlite3_exec(db_, "ROLLBACK;", nullptr, nullptr, nullptr);
    throw;
  }
  return id;
}

std::vector<SnapshotInfo> Datastore::ListSnapshots() const {
  std::lock_guard lock(mu_);
  Statement q(db_,
              "SELECT s.id, s.seq, s.started_at, s.finished_at, s.seed_count, "
              "s.truncated, "
              "(SELECT COUNT(*) FROM files f WHERE f.snapshot_id = s.id), "
              "(SELECT COUNT(*) FROM failures f WHERE f.snapshot_id = s.id) "
              "FROM snapshots s ORDER BY s.seq");
  std::vector<SnapshotInfo> out;
  while (q.Step()) {
    SnapshotInfo info;
    info.snapshot_id = q.Text(0);
    info.sequence = q.Int(1);
    info.started_at = ParseTimestamp(q.Text(2)).value_or(Timestamp{});
    info.finished_at = ParseTimestamp(q.Text(3)).value_or(Timestamp{});
    info.seed_count = static_cast<size_t>(q.Int(4));
    info.truncated = q.Int(5) != 0;
    info.file_count = static_cast<size_t>(q.Int(6));
    info.failure_count = static_cast<size_t>(q.Int(7));
    out.push_back(std::move(info));
  }
  return out;
}

std::optional<std::string> Datastore::LatestSnapshotId() const {
  std::lock_guard lock(mu_);
  Statement q(db_, "SELECT id FROM snapshots ORDER BY seq DESC LIMIT 1");
  if (q.Step()) return q.Text(0);
  return std::nullopt;
}

bool Datastore::HasSnapshot(const std::string& id) const {
  std::lock_guard lock(mu_);
  Statement q(db_, "SELECT 1 FROM snapshots WHERE id = ?");
  q.Bind(1, id);
  return q.Step();
}

std::shared_ptr<const CrawlSnapshot> Datastore::LoadSnapshot(
    const std::string& id) const {
  std::lock_guard lock(mu_);
  if (auto it = cache_.find(id); it != cache_.end()) return it->second;

  auto snap = std::make_shared<CrawlSnapshot>();
  {
    Statement q(db_,
                "SELECT started_at, finished_at, seed_count, truncated FROM "
                "snapshots WHERE id = ?");
    q.Bind(1, id);
    if (!q.Step()) throw SnapshotNotFound("unknown snapshot " + id);
    snap->started_at = ParseTimestamp(q.Text(0)).value_or(Timestamp{});
    snap->finished_at = ParseTimestamp(q.Text(1)).value_or(Timestamp{});
    snap->seed_count = static_cast<size_t>(q.Int(2));
    snap->truncated = q.Int(3) != 0;
  }
  {
    Statement q(db_, "SELECT domain, parent FROM provenance WHERE snapshot_id = ?");
    q.Bind(1, id);
    while (q.Step()) snap->sellers_provenance[q.Text(0)] = q.Text(1);
  }
  {
    Statement q(db_,
                "SELECT kind, domain, url, final_url, fetched_at, blob FROM "
                "files WHERE snapshot_id = ?");
    q.Bind(1, id);
    while (q.Step()) {
      auto kind = ParseFileKind(q.Text(0));
      auto hash = ContentHash::FromHex(q.Text(5));
      auto body = blobs_.Get(hash);
      if (!kind || !body) {
        throw StorageError("snapshot " + id + " references missing blob " +
                           hash.Hex());
      }
      FetchedBody b;
      b.url = q.Text(2);
      b.final_url = q.OptText(3);
      b.fetched_at = ParseTimestamp(q.Text(4)).value_or(Timestamp{});
      b.body = std::move(*body);
      snap->AddBody(q.Text(1), *kind, std::move(b));
    }
  }
  {
    Statement q(db_,
                "SELECT kind, domain, url, status, final_url, fetched_at, "
                "detail FROM failures WHERE snapshot_id = ?");
    q.Bind(1, id);
    while (q.Step()) {
      auto kind = ParseFileKind(q.Text(0));
      auto status = ParseFetchStatus(q.Text(3));
      if (!kind || !status) throw StorageError("corrupt failure row in " + id);
      FetchOutcome o;
      o.url = q.Text(2);
      o.status = *status;
      o.final_url = q.OptText(4);
      o.fetched_at = ParseTimestamp(q.Text(5)).value_or(Timestamp{});
      o.detail = q.Text(6);
      snap->AddFailure(q.Text(1), *kind, std::move(o));
    }
  }
  snap->snapshot_id = id;
  std::shared_ptr<const CrawlSnapshot> sealed = std::move(snap);
  cache_[id] = sealed;
  return sealed;
}

void Datastore::ExportRecords(const std::string& id, std::ostream& out) const {
  auto snap = LoadSnapshot(id);
  for (const auto& [publisher, file] : snap->ads_files) {
    for (const auto& r : file.records) {
      json j = {{"type", "ads_txt_record"},
                {"snapshot_id", id},
                {"publisher", publisher},
                {"ad_system_domain", r.ad_system_domain},
                {"account_id", r.account_id},
                {"account_type", AccountTypeName(r.account_type)},
                {"line", r.source_line}};
      if (r.cert_authority_id) j["cert_authority_id"] = *r.cert_authority_id;
      out << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
    }
  }
  for (const auto& [network, file] : snap->sellers_files) {
    for (const auto& e : file.entries) {
      json j = {{"type", "seller_entry"},
                {"snapshot_id", id},
                {"network", network},
                {"seller_id", e.seller_id},
                {"seller_type", SellerTypeName(e.seller_type)},
                {"is_confidential", e.is_confidential}};
      if (e.name) j["name"] = *e.name;
      if (e.domain) j["domain"] = *e.domain;
      out << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
    }
  }
  for (const auto& [key, f] : snap->failures) {
    json j = {{"type", "fetch_failure"},
              {"snapshot_id", id},
              {"domain", key.first},
              {"kind", FileKindName(key.second)},
              {"status", FetchStatusName(f.status)}};
    out << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

void Datastore::SaveAnalysis(const std::string& id, const std::string& payload) {
  if (!HasSnapshot(id)) throw SnapshotNotFound("unknown snapshot " + id);
  std::lock_guard lock(mu_);
  Statement(db_,
            "INSERT INTO analysis(snapshot_id, payload, updated_at) VALUES "
            "(?,?,?) ON CONFLICT(snapshot_id) DO UPDATE SET "
            "payload = excluded.payload, updated_at = excluded.updated_at")
      .Bind(1, id)
      .Bind(2, payload)
      .Bind(3, FormatTimestamp(Now()))
      .Run();
}

std::optional<std::string> Datastore::LoadAnalysis(const std::string& id) const {
  std::lock_guard lock(mu_);
  Statement q(db_, "SELECT payload FROM analysis WHERE snapshot_id = ?");
  q.Bind(1, id);
  if (q.Step()) return q.Text(0);
  return std::nullopt;
}

}  // namespace adaudit
