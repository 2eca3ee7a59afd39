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

#include "adaudit/fixture_transport.h"

#include <fstream>
#include <sstream>

#include "adaudit/domain.h"

namespace adaudit {

namespace fs = std::filesystem;

FixtureTransport::FixtureTransport(fs::path root) : root_(std::move(root)) {}

std::optional<FixtureTransport::Directive> FixtureTransport::LookupMeta(
    const std::string& host, const std::string& file) const {
  std::ifstream in(root_ / host / "meta");
  if (!in) return std::nullopt;
  std::optional<Directive> found;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = TrimWhitespace(line);
    if (l.empty() || l.front() == '#') continue;
    size_t space = l.find_first_of(" \t");
    if (space == std::string_view::npos) continue;
    if (l.substr(0, space) != file) continue;
    std::string_view directive = TrimWhitespace(l.substr(space));
    size_t eq = directive.find('=');
    if (eq == std::string_view::npos) continue;
    std::string key = AsciiLower(TrimWhitespace(directive.substr(0, eq)));
    std::string value(TrimWhitespace(directive.substr(eq + 1)));
    if (!found) found.emplace();
    if (key == "status") {
      found->status = ParseFetchStatus(value);
    } else if (key == "redirect") {
      found->redirect = value;
    }
  }
  return found;
}

FetchOutcome FixtureTransport::Fetch(const FetchRequest& request) {
  FetchOutcome out;
  out.url = request.url;
  out.fetched_at = Now();

  std::string current = request.url;
  int redirects = 0;
  while (true) {
    auto url = ParseUrl(current);
    if (!url) {
      out.status = FetchStatus::kNetworkError;
      out.detail = "unparseable url " + current;
      return out;
    }
    std::string file = url->path.substr(url->path.find_first_not_of('/') ==
                                                std::string::npos
                                            ? url->path.size()
                                            : url->path.find_first_not_of('/'));
    if (file.empty() || file.find("..") != std::string::npos) {
      out.status = FetchStatus::kNotFound;
      return out;
    }
    auto meta = LookupMeta(url->host, file);
    if (meta && meta->redirect) {
      if (redirects >= request.max_redirects) {
        out.status = FetchStatus::kRedirected;
        out.detail = "redirect limit reached";
        return out;
      }
      ++redirects;
      current = ResolveRedirect(*url, *meta->redirect);
      out.final_url = current;
      continue;
    }
    if (meta && meta->status && *meta->status != FetchStatus::kOk) {
      out.status = *meta->status;
      return out;
    }
    fs::path host_dir = root_ / url->host;
    std::error_code ec;
    if (!fs::is_directory(host_dir, ec)) {
      out.status = FetchStatus::kNetworkError;
      out.detail = "no fixture host " + url->host;
      return out;
    }
    std::ifstream in(host_dir / file, std::ios::binary);
    if (!in) {
      out.status = FetchStatus::kNotFound;
      return out;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string body = buf.str();
    if (LooksNonText(body)) {
      out.status = FetchStatus::kNonText;
      return out;
    }
    out.status = FetchStatus::kOk;
    out.body = std::move(body);
    return out;
  }
}

}  // namespace adaudit
