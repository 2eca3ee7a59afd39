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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adaudit/time_util.h"

namespace adaudit {

enum class FileKind { kAdsTxt, kSellersJson };
std::string_view FileKindName(FileKind k);  // "ads.txt" / "sellers.json"
std::optional<FileKind> ParseFileKind(std::string_view s);

enum class FetchStatus {
  kOk,
  kNotFound,
  kRedirected,  // redirect budget exhausted
  kTimeout,
  kNetworkError,
  kNonText,
};
std::string_view FetchStatusName(FetchStatus s);
std::optional<FetchStatus> ParseFetchStatus(std::string_view s);

struct FetchOutcome {
  std::string url;
  FetchStatus status = FetchStatus::kNetworkError;
  std::optional<std::string> final_url;  // set iff a redirect was followed
  std::optional<std::string> body;       // set iff status == kOk
  Timestamp fetched_at{};
  std::string detail;  // free-form diagnostic, not part of snapshot identity
};

// One logical request: a (domain, kind) pair and the URL chosen for it.
struct FetchRequest {
  std::string domain;
  FileKind kind = FileKind::kAdsTxt;
  std::string url;
  int max_redirects = 3;
  std::chrono::milliseconds timeout{10000};
  std::string user_agent;
};

enum class TransportMode { kLive, kFixture };

// Implementations must be safe to call from several crawl workers at once.
// Redirects are followed inside Fetch().
class Transport {
 public:
  virtual ~Transport() = default;
  virtual FetchOutcome Fetch(const FetchRequest& request) = 0;
  virtual TransportMode mode() const = 0;
};

// Wraps another transport and records every request it forwards.
class InstrumentedTransport : public Transport {
 public:
  explicit InstrumentedTransport(Transport& inner) : inner_(inner) {}

  FetchOutcome Fetch(const FetchRequest& request) override;
  TransportMode mode() const override { return inner_.mode(); }

  std::vector<std::pair<std::string, FileKind>> requests() const;
  // Largest number of requests observed for any single (domain, kind).
  size_t MaxRequestsPerKey() const;
  size_t total_requests() const;

 private:
  Transport& inner_;
  mutable std::mutex mu_;
  std::vector<std::pair<std::string, FileKind>> requests_;
  std::map<std::pair<std::string, FileKind>, size_t> counts_;
};

struct ParsedUrl {
  std::string scheme;
  std::string host;
  int port = 0;  // 0 = scheme default
  std::string path;
};
std::optional<ParsedUrl> ParseUrl(std::string_view url);

// Resolves a possibly relative Location header against `base`.
std::string ResolveRedirect(const ParsedUrl& base, std::string_view location);

std::string DefaultUrl(std::string_view domain, FileKind kind);

// True when more than 30% of the bytes are control characters other than
// tab, CR and LF.
bool LooksNonText(std::string_view body);

}  // namespace adaudit
