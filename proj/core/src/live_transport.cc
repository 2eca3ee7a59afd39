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

#include "adaudit/live_transport.h"

#include "httplib.h"

namespace adaudit {

namespace {

struct Attempt {
  enum class Kind { kResponse, kTimeout, kConnectError };
  Kind kind = Kind::kConnectError;
  int status = 0;
  std::string location;
  std::string body;
  std::string error;
};

Attempt GetOnce(const ParsedUrl& url, const FetchRequest& req) {
  std::string origin = url.scheme + "://" + url.host;
  if (url.port) origin += ":" + std::to_string(url.port);
  httplib::Client client(origin);
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(req.timeout);
  auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
      req.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_follow_location(false);
  if (url.scheme == "https") client.enable_server_certificate_verification(true);

  httplib::Headers headers;
  if (!req.user_agent.empty()) headers.emplace("User-Agent", req.user_agent);

  Attempt a;
  auto res = client.Get(url.path, headers);
  if (!res) {
    auto err = res.error();
    a.kind = (err == httplib::Error::Read || err == httplib::Error::Write ||
              err == httplib::Error::ConnectionTimeout)
                 ? Attempt::Kind::kTimeout
                 : Attempt::Kind::kConnectError;
    a.error = httplib::to_string(err);
    return a;
  }
  a.kind = Attempt::Kind::kResponse;
  a.status = res->status;
  a.location = res->get_header_value("Location");
  a.body = std::move(res->body);
  return a;
}

}  // namespace

LiveTransport::LiveTransport(LiveTransportOptions options)
    : options_(std::move(options)) {}

bool LiveTransport::Reserve(const std::string& domain) {
  std::lock_guard lock(mu_);
  int& n = used_[domain];
  if (n >= options_.max_requests_per_domain) return false;
  ++n;
  return true;
}

FetchOutcome LiveTransport::Fetch(const FetchRequest& request) {
  FetchOutcome out;
  out.url = request.url;
  out.fetched_at = Now();
  if (!Reserve(request.domain)) {
    out.status = FetchStatus::kNetworkError;
    out.detail = "per-domain request budget exhausted";
    return out;
  }

  std::string current = request.url;
  int redirects = 0;
  bool tried_fallback = false;
  while (true) {
    auto url = ParseUrl(current);
    if (!url) {
      out.status = FetchStatus::kNetworkError;
      out.detail = "unparseable url " + current;
      return out;
    }
    if (options_.politeness) options_.politeness->Wait(url->host);
    Attempt a = GetOnce(*url, request);

    if (a.kind == Attempt::Kind::kConnectError && url->scheme == "https" &&
        !tried_fallback && redirects == 0) {
      tried_fallback = true;
      current = "http://" + url->host + url->path;
      continue;
    }
    if (a.kind == Attempt::Kind::kTimeout) {
      out.status = FetchStatus::kTimeout;
      out.detail = a.error;
      return out;
    }
    if (a.kind == Attempt::Kind::kConnectError) {
      out.status = FetchStatus::kNetworkError;
      out.detail = a.error;
      return out;
    }
    if (a.status >= 300 && a.status < 400 && !a.location.empty()) {
      if (redirects >= request.max_redirects) {
        out.status = FetchStatus::kRedirected;
        out.detail = "redirect limit reached";
        return out;
      }
      ++redirects;
      current = ResolveRedirect(*url, a.location);
      out.final_url = current;
      continue;
    }
    if (a.status == 200) {
      if (LooksNonText(a.body)) {
        out.status = FetchStatus::kNonText;
        return out;
      }
      out.status = FetchStatus::kOk;
      out.body = std::move(a.body);
      return out;
    }
    out.status = FetchStatus::kNotFound;
    out.detail = "HTTP " + std::to_string(a.status);
    return out;
  }
}

}  // namespace adaudit
