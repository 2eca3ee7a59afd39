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

#include "adaudit/crawler.h"

#include <atomic>
#include <fstream>
#include <set>
#include <thread>

#include "adaudit/csv.h"
#include "adaudit/domain.h"

namespace adaudit {

namespace {

struct Job {
  std::string domain;
  FileKind kind;
};

// Fetches every job with a bounded worker pool. Results are returned in job
// order so snapshot assembly stays single-threaded and deterministic.
std::vector<FetchOutcome> FetchAll(const std::vector<Job>& jobs,
                                   const CrawlConfig& config,
                                   Transport& transport,
                                   PolitenessLimiter& limiter) {
  std::vector<FetchOutcome> results(jobs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      FetchRequest req;
      req.domain = jobs[i].domain;
      req.kind = jobs[i].kind;
      req.url = RequestUrl(config, jobs[i].domain, jobs[i].kind);
      req.max_redirects = config.max_redirects;
      req.timeout = config.timeout;
      req.user_agent = config.user_agent;
      if (transport.mode() == TransportMode::kLive) {
        if (auto url = ParseUrl(req.url)) limiter.Wait(url->host);
      }
      results[i] = transport.Fetch(req);
    }
  };
  size_t n = std::min(std::max<size_t>(config.workers, 1), jobs.size());
  if (n <= 1) {
    work();
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(n);
  for (size_t t = 0; t < n; ++t) pool.emplace_back(work);
  pool.clear();
  return results;
}

std::vector<std::string> NormalizeSeeds(const std::vector<std::string>& seeds) {
  if (seeds.empty()) throw CrawlConfigError("seed list is empty");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& s : seeds) {
    auto d = ParseDomain(s);
    if (!d) throw CrawlConfigError("invalid seed domain '" + s + "'");
    if (seen.insert(*d).second) out.push_back(*d);
  }
  return out;
}

void Record(CrawlSnapshot& snap, const std::string& domain, FileKind kind,
            FetchOutcome outcome) {
  if (outcome.status == FetchStatus::kOk && outcome.body) {
    FetchedBody b;
    b.url = outcome.url;
    b.final_url = outcome.final_url;
    b.body = std::move(*outcome.body);
    b.fetched_at = outcome.fetched_at;
    snap.AddBody(domain, kind, std::move(b));
  } else {
    snap.AddFailure(domain, kind, std::move(outcome));
  }
}

std::shared_ptr<PolitenessLimiter> EnsureLimiter(
    std::shared_ptr<PolitenessLimiter> limiter, const CrawlConfig& config) {
  return limiter ? limiter
                 : std::make_shared<PolitenessLimiter>(config.per_host_delay);
}

}  // namespace

void CrawlConfig::Validate() const {
  if (max_recursion_depth < 1) {
    throw CrawlConfigError("max_recursion_depth must be >= 1");
  }
  if (max_redirects < 0) throw CrawlConfigError("max_redirects must be >= 0");
  if (max_domains == 0) throw CrawlConfigError("max_domains must be >= 1");
  if (timeout.count() <= 0) throw CrawlConfigError("timeout must be positive");
  for (const auto& [domain, url] : sellers_path_aliases) {
    if (!ParseUrl(url)) {
      throw CrawlConfigError("alias for " + domain + " is not a URL: " + url);
    }
  }
}

std::string RequestUrl(const CrawlConfig& config, const std::string& domain,
                       FileKind kind) {
  if (kind == FileKind::kSellersJson) {
    auto it = config.sellers_path_aliases.find(domain);
    if (it != config.sellers_path_aliases.end()) return it->second;
  }
  return DefaultUrl(domain, kind);
}

CrawlSnapshot CrawlAdsTxt(const std::vector<std::string>& seeds,
                          const CrawlConfig& config, Transport& transport,
                          std::shared_ptr<PolitenessLimiter> limiter) {
  config.Validate();
  auto domains = NormalizeSeeds(seeds);
  limiter = EnsureLimiter(std::move(limiter), config);

  CrawlSnapshot snap;
  snap.started_at = Now();
  snap.seed_count = domains.size();
  if (domains.size() > config.max_domains) {
    domains.resize(config.max_domains);
    snap.truncated = true;
  }
  std::vector<Job> jobs;
  jobs.reserve(domains.size());
  for (const auto& d : domains) jobs.push_back({d, FileKind::kAdsTxt});
  auto outcomes = FetchAll(jobs, config, transport, *limiter);
  for (size_t i = 0; i < jobs.size(); ++i) {
    Record(snap, jobs[i].domain, FileKind::kAdsTxt, std::move(outcomes[i]));
  }
  snap.finished_at = Now();
  snap.Seal();
  return snap;
}

CrawlSnapshot CrawlSellersRecursive(const std::vector<std::string>& seeds,
                                    const CrawlConfig& config,
                                    Transport& transport,
                                    std::shared_ptr<PolitenessLimiter> limiter) {
  config.Validate();
  auto domains = NormalizeSeeds(seeds);
  limiter = EnsureLimiter(std::move(limiter), config);

  CrawlSnapshot snap;
  snap.started_at = Now();
  snap.seed_count = domains.size();

  struct Pending {
    std::string domain;
    std::string parent;
  };
  std::set<std::string> visited(domains.begin(), domains.end());
  std::vector<Pending> frontier;
  for (const auto& d : domains) frontier.push_back({d, ""});

  size_t fetched = 0;
  for (int depth = 1; !frontier.empty(); ++depth) {
    if (fetched + frontier.size() > config.max_domains) {
      frontier.resize(config.max_domains - fetched);
      snap.truncated = true;
    }
    std::vector<Job> jobs;
    jobs.reserve(frontier.size());
    for (const auto& p : frontier) jobs.push_back({p.domain, FileKind::kSellersJson});
    auto outcomes = FetchAll(jobs, config, transport, *limiter);
    fetched += jobs.size();

    std::vector<Pending> next;
    for (size_t i = 0; i < frontier.size(); ++i) {
      const auto& p = frontier[i];
      snap.sellers_provenance[p.domain] = p.parent;
      bool ok = outcomes[i].status == FetchStatus::kOk;
      Record(snap, p.domain, FileKind::kSellersJson, std::move(outcomes[i]));
      if (!ok || depth >= config.max_recursion_depth) continue;
      for (const auto& e : snap.sellers_files[p.domain].entries) {
        if (e.domain && visited.insert(*e.domain).second) {
          next.push_back({*e.domain, p.domain});
        }
      }
    }
    if (snap.truncated) break;
    frontier = std::move(next);
  }
  snap.finished_at = Now();
  snap.Seal();
  return snap;
}

LiveFetchResult LiveFetchPassthrough(const std::string& domain, FileKind kind,
                                     const CrawlConfig& config,
                                     Transport& transport,
                                     PolitenessLimiter* limiter) {
  auto d = ParseDomain(domain);
  if (!d) throw CrawlConfigError("invalid domain '" + domain + "'");
  FetchRequest req;
  req.domain = *d;
  req.kind = kind;
  req.url = RequestUrl(config, *d, kind);
  req.max_redirects = config.max_redirects;
  req.timeout = config.timeout;
  req.user_agent = config.user_agent;
  if (limiter && transport.mode() == TransportMode::kLive) {
    if (auto url = ParseUrl(req.url)) limiter->Wait(url->host);
  }
  LiveFetchResult result;
  result.outcome = transport.Fetch(req);
  if (result.outcome.status == FetchStatus::kOk && result.outcome.body) {
    if (kind == FileKind::kAdsTxt) {
      result.ads_txt = ParseAdsTxt(*d, *result.outcome.body);
    } else {
      result.sellers_json = ParseSellersJson(*d, *result.outcome.body);
    }
  }
  return result;
}

SeedList LoadSeedList(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read seed list " + path.string());
  SeedList out;
  std::set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = TrimWhitespace(line);
    if (l.empty() || l.front() == '#') continue;
    auto fields = SplitCsvLine(l);
    std::string_view candidate = fields.size() >= 2 ? fields[1] : fields[0];
    auto d = ParseDomain(candidate);
    if (!d) {
      ++out.skipped;
      continue;
    }
    if (seen.insert(*d).second) out.domains.push_back(*d);
  }
  return out;
}

std::map<std::string, std::string> LoadAliasMap(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read alias map " + path.string());
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = TrimWhitespace(line);
    if (l.empty() || l.front() == '#') continue;
    size_t sep = l.find_first_of(", \t");
    if (sep == std::string_view::npos) continue;
    auto d = ParseDomain(l.substr(0, sep));
    std::string url(TrimWhitespace(l.substr(sep + 1)));
    if (d && !url.empty()) out[*d] = url;
  }
  return out;
}

}  // namespace adaudit
