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

#include "adaudit/transport.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "adaudit/domain.h"

namespace adaudit {

std::string_view FileKindName(FileKind k) {
  return k == FileKind::kAdsTxt ? "ads.txt" : "sellers.json";
}

std::optional<FileKind> ParseFileKind(std::string_view s) {
  if (s == "ads.txt" || s == "ads") return FileKind::kAdsTxt;
  if (s == "sellers.json" || s == "sellers") return FileKind::kSellersJson;
  return std::nullopt;
}

std::string_view FetchStatusName(FetchStatus s) {
  switch (s) {
    case FetchStatus::kOk:
      return "OK";
    case FetchStatus::kNotFound:
      return "NOT_FOUND";
    case FetchStatus::kRedirected:
      return "REDIRECTED";
    case FetchStatus::kTimeout:
      return "TIMEOUT";
    case FetchStatus::kNetworkError:
      return "NETWORK_ERROR";
    case FetchStatus::kNonText:
      return "NON_TEXT";
  }
  return "NETWORK_ERROR";
}

std::optional<FetchStatus> ParseFetchStatus(std::string_view s) {
  std::string u;
  for (char c : s) u.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(
                                                     static_cast<unsigned char>(c))));
  for (auto st : {FetchStatus::kOk, FetchStatus::kNotFound,
                  FetchStatus::kRedirected, FetchStatus::kTimeout,
                  FetchStatus::kNetworkError, FetchStatus::kNonText}) {
    if (FetchStatusName(st) == u) return st;
  }
  return std::nullopt;
}

FetchOutcome InstrumentedTransport::Fetch(const FetchRequest& request) {
  {
    std::lock_guard lock(mu_);
    requests_.emplace_back(request.domain, request.kind);
    ++counts_[{request.domain, request.kind}];
  }
  return inner_.Fetch(request);
}

std::vector<std::pair<std::string, FileKind>> InstrumentedTransport::requests()
    const {
  std::lock_guard lock(mu_);
  return requests_;
}

size_t InstrumentedTransport::MaxRequestsPerKey() const {
  std::lock_guard lock(mu_);
  size_t m = 0;
  for (const auto& [key, n] : counts_) m = std::max(m, n);
  return m;
}

size_t InstrumentedTransport::total_requests() const {
  std::lock_guard lock(mu_);
  return requests_.size();
}

std::optional<ParsedUrl> ParseUrl(std::string_view url) {
  ParsedUrl out;
  size_t sep = url.find("://");
  if (sep == std::string_view::npos) return std::nullopt;
  out.scheme = AsciiLower(url.substr(0, sep));
  if (out.scheme != "http" && out.scheme != "https") return std::nullopt;
  std::string_view rest = url.substr(sep + 3);
  size_t slash = rest.find('/');
  std::string_view authority = rest.substr(0, slash);
  out.path = slash == std::string_view::npos ? "/" : std::string(rest.substr(slash));
  if (size_t colon = authority.rfind(':'); colon != std::string_view::npos) {
    std::string_view port = authority.substr(colon + 1);
    int p = 0;
    auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), p);
    if (ec != std::errc() || ptr != port.data() + port.size() || p <= 0 ||
        p > 65535) {
      return std::nullopt;
    }
    out.port = p;
    authority = authority.substr(0, colon);
  }
  out.host = NormalizeDomain(authority);
  if (out.host.empty()) return std::nullopt;
  return out;
}

std::string ResolveRedirect(const ParsedUrl& base, std::string_view location) {
  if (location.find("://") != std::string_view::npos) return std::string(location);
  std::string origin = base.scheme + "://" + base.host;
  if (base.port) origin += ":" + std::to_string(base.port);
  if (location.substr(0, 2) == "//") return base.scheme + ":" + std::string(location);
  if (!location.empty() && location.front() == '/') return origin + std::string(location);
  std::string dir = base.path.substr(0, base.path.rfind('/') + 1);
  return origin + dir + std::string(location);
}

std::string DefaultUrl(std::string_view domain, FileKind kind) {
  return "https://" + std::string(domain) + "/" + std::string(FileKindName(kind));
}

bool LooksNonText(std::string_view body) {
  if (body.empty()) return false;
  size_t control = 0;
  for (char ch : body) {
    auto c = static_cast<unsigned char>(ch);
    if ((c < 0x20 && c != '\t' && c != '\n' && c != '\r') || c == 0x7F) {
      ++control;
    }
  }
  return control * 10 > body.size() * 3;
}

}  // namespace adaudit
