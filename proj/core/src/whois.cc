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

#include "adaudit/whois.h"

#include <netdb.h>
#include <sys/socket.h>
#include <sys/time.h>
#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "adaudit/domain.h"

namespace adaudit {

namespace {

struct KeyValue {
  std::string key;  // normalized
  std::string value;
  bool indented = false;
  bool has_colon = false;
};

std::vector<std::string_view> Lines(std::string_view raw) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= raw.size()) {
    size_t nl = raw.find('\n', start);
    if (nl == std::string_view::npos) nl = raw.size();
    std::string_view line = raw.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = nl + 1;
  }
  return out;
}

KeyValue SplitLine(std::string_view line) {
  KeyValue kv;
  kv.indented = !line.empty() && (line.front() == ' ' || line.front() == '\t');
  std::string_view l = TrimWhitespace(line);
  size_t colon = l.find(':');
  if (colon == std::string_view::npos) {
    kv.value = std::string(l);
    return kv;
  }
  kv.has_colon = true;
  kv.key = NormalizeOrg(l.substr(0, colon));
  kv.value = std::string(TrimWhitespace(l.substr(colon + 1)));
  return kv;
}

bool IsSectionHeader(std::string_view l) {
  l = TrimWhitespace(l);
  return l.size() > 2 && l.front() == '[' && l.back() == ']';
}

// JPRS records put fields as "[Organization]  Value" or "f. [組織名]  Value".
std::optional<std::pair<std::string, std::string>> BracketField(
    std::string_view line) {
  std::string_view l = TrimWhitespace(line);
  size_t open = l.find('[');
  size_t close = l.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close < open || open > 4) {
    return std::nullopt;
  }
  std::string key = NormalizeOrg(l.substr(open + 1, close - open - 1));
  std::string value(TrimWhitespace(l.substr(close + 1)));
  return std::make_pair(key, value);
}

bool ContainsKeyword(std::string_view haystack,
                     const PrivacyKeywordList& keywords) {
  std::string lower = NormalizeOrg(haystack);
  for (const auto& k : keywords.keywords) {
    if (!k.empty() && lower.find(k) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

std::string_view OwnerStatusName(OwnerStatus s) {
  switch (s) {
    case OwnerStatus::kResolved:
      return "RESOLVED";
    case OwnerStatus::kRedacted:
      return "REDACTED";
    case OwnerStatus::kUnparseable:
      return "UNPARSEABLE";
    case OwnerStatus::kTooShort:
      return "TOO_SHORT";
    case OwnerStatus::kMissing:
      return "MISSING";
  }
  return "MISSING";
}

std::optional<OwnerStatus> ParseOwnerStatus(std::string_view s) {
  for (auto st : {OwnerStatus::kResolved, OwnerStatus::kRedacted,
                  OwnerStatus::kUnparseable, OwnerStatus::kTooShort,
                  OwnerStatus::kMissing}) {
    if (OwnerStatusName(st) == s) return st;
  }
  return std::nullopt;
}

std::string NormalizeOrg(std::string_view org) {
  std::string out;
  bool pending_space = false;
  for (char c : org) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v') {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

PrivacyKeywordList LoadPrivacyKeywords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read keyword list " + path.string());
  PrivacyKeywordList out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = TrimWhitespace(line);
    if (l.empty() || l.front() == '#') continue;
    out.keywords.push_back(NormalizeOrg(l));
  }
  return out;
}

const PrivacyKeywordList& DefaultPrivacyKeywords() {
  static const PrivacyKeywordList kList{{
      "redacted",
      "privacy",
      "withheld",
      "whoisguard",
      "domains by proxy",
      "not disclosed",
      "data protected",
      "gdpr masked",
      "statutory masking",
      "identity protect",
      "private registration",
      "registration private",
      "proxy protection",
      "contact privacy",
      "whois agent",
      "non-public data",
  }};
  return kList;
}

const std::vector<std::string>& DefaultRegistrantKeys() {
  static const std::vector<std::string> kKeys = {
      "registrant organization", "registrant organisation",
      "registrant org",          "registrant",
      "org",                     "organization",
      "organisation",            "holder",
      "registrant company",      "owner",
      "owner organization",      "registrant-organization",
  };
  return kKeys;
}

std::optional<std::string> ParseWhois(std::string_view raw,
                                      const std::vector<std::string>& keys) {
  auto is_key = [&](const std::string& k) {
    return std::find(keys.begin(), keys.end(), k) != keys.end();
  };
  auto lines = Lines(raw);
  bool in_registrant_section = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (TrimWhitespace(line).empty()) continue;
    if (TrimWhitespace(line).front() == '%' || TrimWhitespace(line).front() == '#') {
      continue;
    }

    if (auto bf = BracketField(line)) {
      if (bf->second.empty() && IsSectionHeader(line)) {
        in_registrant_section = bf->first == "registrant";
        continue;
      }
      bool org_key = bf->first == "organization" || bf->first == "name" ||
                     bf->first == "registrant";
      if (!bf->second.empty() &&
          ((in_registrant_section && org_key) || is_key(bf->first))) {
        return bf->second;
      }
      continue;
    }

    KeyValue kv = SplitLine(line);
    if (!kv.has_colon || !is_key(kv.key)) continue;
    if (!kv.value.empty()) return kv.value;
    // Value on the following indented line.
    for (size_t j = i + 1; j < lines.size(); ++j) {
      std::string_view next = TrimWhitespace(lines[j]);
      if (next.empty()) continue;
      bool indented = lines[j].front() == ' ' || lines[j].front() == '\t';
      if (!indented || next.find(':') != std::string_view::npos) break;
      return std::string(next);
    }
  }
  return std::nullopt;
}

std::vector<std::string> RegistrantBlock(std::string_view raw) {
  std::vector<std::string> out;
  auto lines = Lines(raw);
  bool in_block = false;
  for (std::string_view line : lines) {
    std::string_view t = TrimWhitespace(line);
    if (t.empty()) {
      in_block = false;
      continue;
    }
    bool indented = line.front() == ' ' || line.front() == '\t';
    if (IsSectionHeader(t)) {
      in_block = NormalizeOrg(t.substr(1, t.size() - 2)) == "registrant";
      continue;
    }
    KeyValue kv = SplitLine(line);
    if (kv.has_colon && kv.key.rfind("registrant", 0) == 0) {
      out.emplace_back(t);
      in_block = kv.value.empty();
      continue;
    }
    if (in_block && (indented || !kv.has_colon)) {
      out.emplace_back(t);
      continue;
    }
    if (in_block && kv.has_colon && !indented) in_block = false;
    if (auto bf = BracketField(line)) {
      if (bf->first.rfind("registrant", 0) == 0) out.emplace_back(t);
    }
  }
  return out;
}

OwnerResolution ResolveOwner(const WhoisRecord& record,
                             const PrivacyKeywordList& keywords) {
  OwnerResolution out;
  out.domain = record.domain;
  if (!record.retrieved || TrimWhitespace(record.raw_text).empty()) {
    out.status = OwnerStatus::kMissing;
    return out;
  }
  std::optional<std::string> org =
      record.registrant_org ? record.registrant_org : ParseWhois(record.raw_text);
  bool redacted = org && ContainsKeyword(*org, keywords);
  for (const auto& line : RegistrantBlock(record.raw_text)) {
    redacted = redacted || ContainsKeyword(line, keywords);
  }
  if (redacted) {
    out.status = OwnerStatus::kRedacted;
    return out;
  }
  if (!org) {
    out.status = OwnerStatus::kUnparseable;
    return out;
  }
  std::string normalized = NormalizeOrg(*org);
  if (normalized.size() < 3) {
    out.status = OwnerStatus::kTooShort;
    return out;
  }
  out.status = OwnerStatus::kResolved;
  out.normalized_org = std::move(normalized);
  return out;
}

FixtureWhoisSource::FixtureWhoisSource(std::filesystem::path dir)
    : dir_(std::move(dir)) {}

WhoisRecord FixtureWhoisSource::Lookup(const std::string& domain) {
  WhoisRecord rec;
  rec.domain = domain;
  rec.fetched_at = Now();
  if (domain.find('/') != std::string::npos || domain.find("..") != std::string::npos) {
    return rec;
  }
  std::ifstream in(dir_ / (domain + ".txt"), std::ios::binary);
  if (!in) return rec;
  std::ostringstream buf;
  buf << in.rdbuf();
  rec.raw_text = buf.str();
  rec.retrieved = !TrimWhitespace(rec.raw_text).empty();
  rec.registrant_org = ParseWhois(rec.raw_text);
  return rec;
}

namespace {

std::optional<std::string> Port43Query(const std::string& server,
                                       const std::string& query,
                                       std::chrono::milliseconds timeout) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (getaddrinfo(server.c_str(), "43", &hints, &res) != 0) return std::nullopt;
  std::optional<std::string> out;
  for (addrinfo* ai = res; ai && !out; ai = ai->ai_next) {
    int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    timeval tv{};
    tv.tv_sec = static_cast<long>(timeout.count() / 1000);
    tv.tv_usec = static_cast<long>((timeout.count() % 1000) * 1000);
    setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
    setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof(tv));
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) {
      std::string q = query + "\r\n";
      if (::send(fd, q.data(), q.size(), 0) == static_cast<ssize_t>(q.size())) {
        std::string body;
        char buf[4096];
        ssize_t n;
        while ((n = ::recv(fd, buf, sizeof(buf), 0)) > 0) {
          body.append(buf, static_cast<size_t>(n));
          if (body.size() > (1u << 20)) break;
        }
        out = std::move(body);
      }
    }
    ::close(fd);
  }
  freeaddrinfo(res);
  return out;
}

}  // namespace

LiveWhoisSource::LiveWhoisSource(std::chrono::milliseconds timeout)
    : timeout_(timeout) {}

WhoisRecord LiveWhoisSource::Lookup(const std::string& domain) {
  WhoisRecord rec;
  rec.domain = domain;
  rec.fetched_at = Now();
  auto iana = Port43Query("whois.iana.org", domain, timeout_);
  if (!iana) return rec;
  std::string server;
  for (auto line : Lines(*iana)) {
    KeyValue kv = SplitLine(line);
    if (kv.key == "refer" || kv.key == "whois") {
      server = kv.value;
      break;
    }
  }
  std::optional<std::string> text = server.empty()
                                        ? iana
                                        : Port43Query(server, domain, timeout_);
  // Thin registries point at the registrar's server.
  if (text) {
    for (auto line : Lines(*text)) {
      KeyValue kv = SplitLine(line);
      if (kv.key == "registrar whois server" && !kv.value.empty() &&
          kv.value != server) {
        if (auto deeper = Port43Query(kv.value, domain, timeout_)) text = deeper;
        break;
      }
    }
  }
  if (!text) return rec;
  rec.raw_text = std::move(*text);
  rec.retrieved = !TrimWhitespace(rec.raw_text).empty();
  rec.registrant_org = ParseWhois(rec.raw_text);
  return rec;
}

std::map<std::string, OwnerResolution> ResolveOwners(
    const std::vector<std::string>& domains, WhoisSource& source,
    const PrivacyKeywordList& keywords) {
  std::map<std::string, OwnerResolution> out;
  for (const auto& d : domains) {
    if (out.count(d)) continue;
    out[d] = ResolveOwner(source.Lookup(d), keywords);
  }
  return out;
}

}  // namespace adaudit
