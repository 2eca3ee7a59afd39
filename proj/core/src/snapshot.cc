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

#include "adaudit/snapshot.h"

#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "adaudit/blob_store.h"
#include "adaudit/content_hash.h"

namespace adaudit {

namespace {

using nlohmann::json;

constexpr std::string_view kStagedFormat = "adaudit-staged-snapshot/1";

std::string OptionalString(const json& j, const char* key) {
  auto it = j.find(key);
  return (it != j.end() && it->is_string()) ? it->get<std::string>() : "";
}

}  // namespace

void CrawlSnapshot::AddBody(const std::string& domain, FileKind kind,
                            FetchedBody body) {
  if (kind == FileKind::kAdsTxt) {
    ads_files[domain] = ParseAdsTxt(domain, body.body);
  } else {
    sellers_files[domain] = ParseSellersJson(domain, body.body);
    sellers_provenance.try_emplace(domain, "");
  }
  failures.erase({domain, kind});
  bodies[{domain, kind}] = std::move(body);
}

void CrawlSnapshot::AddFailure(const std::string& domain, FileKind kind,
                               FetchOutcome outcome) {
  outcome.body.reset();
  failures[{domain, kind}] = std::move(outcome);
}

std::string CrawlSnapshot::ComputeId() const {
  Sha256Builder h;
  h.Field("adaudit-snapshot-v1");
  for (const auto& [key, b] : bodies) {
    h.Field("B").Field(FileKindName(key.second)).Field(key.first);
    h.Field(ContentHash::Of(b.body).Hex()).Field(b.final_url.value_or("-"));
  }
  for (const auto& [key, f] : failures) {
    h.Field("F").Field(FileKindName(key.second)).Field(key.first);
    h.Field(FetchStatusName(f.status)).Field(f.final_url.value_or("-"));
  }
  for (const auto& [domain, parent] : sellers_provenance) {
    h.Field("P").Field(domain).Field(parent);
  }
  h.Field(std::to_string(seed_count)).Field(truncated ? "T" : "C");
  return h.Finish().Hex().substr(0, 16);
}

std::string CrawlSnapshot::CheckConsistency() const {
  for (const auto& [key, f] : failures) {
    if (bodies.count(key)) {
      return "domain " + key.first + " has both a body and a failure for " +
             std::string(FileKindName(key.second));
    }
  }
  for (const auto& [key, b] : bodies) {
    bool parsed = key.second == FileKind::kAdsTxt
                      ? ads_files.count(key.first) > 0
                      : sellers_files.count(key.first) > 0;
    if (!parsed) return "body without parsed file for " + key.first;
  }
  if (ads_files.size() + sellers_files.size() != bodies.size()) {
    return "parsed files without bodies";
  }
  for (const auto& [domain, file] : sellers_files) {
    if (ProvenanceDepth(domain) == 0) {
      return "sellers.json for " + domain + " has no provenance chain";
    }
  }
  return "";
}

size_t CrawlSnapshot::ProvenanceDepth(const std::string& domain) const {
  size_t depth = 0;
  std::set<std::string> seen;
  std::string cur = domain;
  while (true) {
    auto it = sellers_provenance.find(cur);
    if (it == sellers_provenance.end() || !seen.insert(cur).second) return 0;
    ++depth;
    if (it->second.empty()) return depth;
    cur = it->second;
  }
}

CrawlSnapshot MergeSnapshots(const CrawlSnapshot& a, const CrawlSnapshot& b) {
  CrawlSnapshot out = a;
  out.started_at = std::min(a.started_at, b.started_at);
  out.finished_at = std::max(a.finished_at, b.finished_at);
  out.seed_count = a.seed_count + b.seed_count;
  out.truncated = a.truncated || b.truncated;
  for (const auto& [key, body] : b.bodies) {
    auto it = out.bodies.find(key);
    if (it != out.bodies.end()) {
      if (it->second.body != body.body) {
        throw std::invalid_argument("conflicting bodies for " + key.first + " " +
                                    std::string(FileKindName(key.second)));
      }
      continue;
    }
    if (out.failures.count(key)) {
      throw std::invalid_argument("body and failure for " + key.first);
    }
    out.AddBody(key.first, key.second, body);
  }
  for (const auto& [key, f] : b.failures) {
    if (out.bodies.count(key)) {
      throw std::invalid_argument("body and failure for " + key.first);
    }
    out.failures.try_emplace(key, f);
  }
  for (const auto& [domain, parent] : b.sellers_provenance) {
    auto [it, inserted] = out.sellers_provenance.try_emplace(domain, parent);
    // A seed in either crawl stays a seed.
    if (!inserted && parent.empty()) it->second = "";
  }
  out.Seal();
  return out;
}

void SaveStagedSnapshot(const CrawlSnapshot& snapshot, BlobStore& blobs,
                        const std::filesystem::path& manifest_path) {
  json files = json::array();
  for (const auto& [key, b] : snapshot.bodies) {
    json f = {{"domain", key.first},
              {"kind", FileKindName(key.second)},
              {"url", b.url},
              {"fetched_at", FormatTimestamp(b.fetched_at)},
              {"blob", blobs.Put(b.body).Hex()}};
    if (b.final_url) f["final_url"] = *b.final_url;
    files.push_back(std::move(f));
  }
  json failures = json::array();
  for (const auto& [key, o] : snapshot.failures) {
    json f = {{"domain", key.first},
              {"kind", FileKindName(key.second)},
              {"url", o.url},
              {"status", FetchStatusName(o.status)},
              {"fetched_at", FormatTimestamp(o.fetched_at)},
              {"detail", o.detail}};
    if (o.final_url) f["final_url"] = *o.final_url;
    failures.push_back(std::move(f));
  }
  json manifest = {{"format", kStagedFormat},
                   {"snapshot_id", snapshot.snapshot_id},
                   {"started_at", FormatTimestamp(snapshot.started_at)},
                   {"finished_at", FormatTimestamp(snapshot.finished_at)},
                   {"seed_count", snapshot.seed_count},
                   {"truncated", snapshot.truncated},
                   {"files", std::move(files)},
                   {"failures", std::move(failures)},
                   {"provenance", snapshot.sellers_provenance}};
  auto tmp = manifest_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << manifest.dump(1, ' ', false, json::error_handler_t::replace) << "\n";
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, manifest_path);
}

CrawlSnapshot LoadStagedSnapshot(const std::filesystem::path& manifest_path,
                                 const BlobStore& blobs) {
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot read " + manifest_path.string());
  json m = json::parse(in, nullptr, false);
  if (m.is_discarded() || !m.is_object() ||
      OptionalString(m, "format") != kStagedFormat) {
    throw std::runtime_error("not a staged snapshot: " + manifest_path.string());
  }
  CrawlSnapshot s;
  s.started_at = ParseTimestamp(OptionalString(m, "started_at")).value_or(Timestamp{});
  s.finished_at = ParseTimestamp(OptionalString(m, "finished_at")).value_or(Timestamp{});
  s.seed_count = m.value("seed_count", size_t{0});
  s.truncated = m.value("truncated", false);
  if (m.contains("provenance") && m["provenance"].is_object()) {
    for (const auto& [domain, parent] : m["provenance"].items()) {
      s.sellers_provenance[domain] = parent.get<std::string>();
    }
  }
  for (const auto& f : m.value("files", json::array())) {
    auto kind = ParseFileKind(OptionalString(f, "kind"));
    if (!kind) throw std::runtime_error("bad file kind in manifest");
    auto hash = ContentHash::FromHex(OptionalString(f, "blob"));
    auto body = blobs.Get(hash);
    if (!body) throw std::runtime_error("missing blob " + hash.Hex());
    FetchedBody b;
    b.url = OptionalString(f, "url");
    if (f.contains("final_url")) b.final_url = OptionalString(f, "final_url");
    b.fetched_at = ParseTimestamp(OptionalString(f, "fetched_at")).value_or(Timestamp{});
    b.body = std::move(*body);
    s.AddBody(OptionalString(f, "domain"), *kind, std::move(b));
  }
  for (const auto& f : m.value("failures", json::array())) {
    auto kind = ParseFileKind(OptionalString(f, "kind"));
    auto status = ParseFetchStatus(OptionalString(f, "status"));
    if (!kind || !status) throw std::runtime_error("bad failure in manifest");
    FetchOutcome o;
    o.url = OptionalString(f, "url");
    o.status = *status;
    if (f.contains("final_url")) o.final_url = OptionalString(f, "final_url");
    o.fetched_at = ParseTimestamp(OptionalString(f, "fetched_at")).value_or(Timestamp{});
    o.detail = OptionalString(f, "detail");
    s.AddFailure(OptionalString(f, "domain"), *kind, std::move(o));
  }
  s.Seal();
  return s;
}

}  // namespace adaudit
