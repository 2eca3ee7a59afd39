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

#include "adaudit/query_service.h"

#include <algorithm>

#include "adaudit/domain.h"
#include "adaudit/time_util.h"
#include "json.hpp"

namespace adaudit {

using json = nlohmann::ordered_json;

namespace {

constexpr size_t kMaxIdLength = 256;

int HttpCode(ApiStatus s) {
  switch (s) {
    case ApiStatus::kOk: return 200;
    case ApiStatus::kNotFound: return 404;
    case ApiStatus::kInvalidInput: return 400;
    case ApiStatus::kUpstreamError: return 502;
  }
  return 500;
}

ApiResponse Envelope(ApiStatus status, const std::string& snapshot_id,
                     json payload, int http = 0) {
  json doc;
  doc["status"] = ApiStatusName(status);
  doc["snapshot_id"] = snapshot_id;
  doc["generated_at"] = FormatTimestamp(Now());
  if (status == ApiStatus::kOk) {
    doc["payload"] = std::move(payload);
  } else {
    doc["error"] = std::move(payload);
  }
  return ApiResponse{http ? http : HttpCode(status), status, doc.dump()};
}

ApiResponse Ok(const std::string& snapshot_id, json payload) {
  return Envelope(ApiStatus::kOk, snapshot_id, std::move(payload));
}

ApiResponse Error(ApiStatus status, const std::string& message,
                  const std::string& snapshot_id = "", int http = 0,
                  json extra = json::object()) {
  extra["message"] = message;
  return Envelope(status, snapshot_id, std::move(extra), http);
}

std::vector<std::string> SplitPath(const std::string& path) {
  std::vector<std::string> parts;
  size_t i = 0;
  while (i < path.size()) {
    size_t j = path.find('/', i);
    if (j == std::string::npos) j = path.size();
    if (j > i) parts.push_back(path.substr(i, j - i));
    i = j + 1;
  }
  return parts;
}

std::optional<std::string> ValidDomain(const std::string& raw) {
  if (raw.empty() || ContainsWhitespace(raw)) return std::nullopt;
  return ParseDomain(raw);
}

bool ValidId(const std::string& id) {
  if (id.empty() || id.size() > kMaxIdLength) return false;
  return std::none_of(id.begin(), id.end(), [](unsigned char c) {
    return c <= 0x20 || c == 0x7f;
  });
}

json FindingsJson(const std::vector<ParseFinding>& findings) {
  json a = json::array();
  for (const auto& f : findings) {
    a.push_back({{"severity", SeverityName(f.severity)},
                 {"code", FindingCodeName(f.code)},
                 {"message", f.message},
                 {"location", f.location.ToString()}});
  }
  return a;
}

json SellerEntryJson(const SellerEntry& e) {
  json j = {{"seller_id", e.seller_id},
            {"seller_type", SellerTypeName(e.seller_type)},
            {"is_confidential", e.is_confidential}};
  j["name"] = e.name ? json(*e.name) : json(nullptr);
  j["domain"] = e.domain ? json(*e.domain) : json(nullptr);
  return j;
}

json ListingsJson(const std::set<Listing>& ls) {
  json a = json::array();
  for (const auto& [issuer, id] : ls) a.push_back({{"issuer", issuer}, {"seller_id", id}});
  return a;
}

json TagsJson(const std::set<ObjectionTag>& tags) {
  json a = json::array();
  for (auto t : tags) a.push_back(ObjectionTagName(t));
  return a;
}

}  // namespace

std::string_view ApiStatusName(ApiStatus s) {
  switch (s) {
    case ApiStatus::kOk: return "OK";
    case ApiStatus::kNotFound: return "NOT_FOUND";
    case ApiStatus::kInvalidInput: return "INVALID_INPUT";
    case ApiStatus::kUpstreamError: return "UPSTREAM_ERROR";
  }
  return "";
}

PartnershipResult FindPartnerships(const EntryIndex& index,
                                   const std::string& domain) {
  PartnershipResult r;
  r.query_domain = domain;
  auto pub = index.by_publisher().find(domain);
  if (pub == index.by_publisher().end()) return r;
  for (const auto& rec : pub->second) {
    if (rec.account_type != AccountType::kDirect) continue;
    AccountKey key{rec.ad_system_domain, rec.account_id};
    auto it = index.by_account().find(key);
    if (it == index.by_account().end()) continue;
    for (const auto& [other, type] : it->second) {
      if (other == domain || type != AccountType::kDirect) continue;
      r.partners[other].insert(key);
    }
  }
  return r;
}

RelationshipResult FindRelationships(const EntryIndex& index,
                                     const RelationshipGraph& graph,
                                     const std::string& domain) {
  RelationshipResult r;
  r.domain = domain;
  auto pub = index.by_publisher().find(domain);
  if (pub != index.by_publisher().end()) {
    for (const auto& rec : pub->second) {
      r.claimed_networks.push_back({rec.ad_system_domain, rec.account_id, rec.account_type});
    }
  }
  for (const RelationshipEdge* e : graph.EdgesTo(domain)) {
    r.acknowledging_networks.push_back({e->issuer, e->seller_id, e->seller_type});
  }
  auto dedup = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(r.claimed_networks);
  dedup(r.acknowledging_networks);
  return r;
}

QueryService::QueryService(Datastore& store, QueryServiceOptions options)
    : store_(store),
      options_(std::move(options)),
      client_limiter_(options_.fetch_burst, options_.fetch_per_second, options_.clock),
      target_limiter_(options_.fetch_burst, options_.fetch_per_second, options_.clock) {}

std::shared_ptr<const AnalysisContext> QueryService::Context(
    const std::string& snapshot_id) {
  {
    std::lock_guard lock(mu_);
    auto it = contexts_.find(snapshot_id);
    if (it != contexts_.end()) return it->second;
  }
  auto snapshot = store_.LoadSnapshot(snapshot_id);
  AnalysisInputs inputs = options_.inputs;
  if (auto doc = store_.LoadAnalysis(snapshot_id)) {
    auto owners = OwnersFromAnalysis(*doc);
    inputs.owners.insert(owners.begin(), owners.end());
    inputs.whois = nullptr;
  }
  auto ctx = AnalysisContext::Build(snapshot, inputs);
  std::lock_guard lock(mu_);
  return contexts_.try_emplace(snapshot_id, ctx).first->second;
}

std::string QueryService::Analyze(const std::string& snapshot_id) {
  auto ctx = AnalysisContext::Build(store_.LoadSnapshot(snapshot_id), options_.inputs);
  std::string doc = MaterializeAnalysis(*ctx);
  store_.SaveAnalysis(snapshot_id, doc);
  std::lock_guard lock(mu_);
  contexts_[snapshot_id] = ctx;
  return doc;
}

std::optional<std::string> QueryService::SelectSnapshot(const ApiRequest& req) const {
  auto it = req.query.find("snapshot");
  if (it != req.query.end() && !it->second.empty()) return it->second;
  return store_.LatestSnapshotId();
}

bool QueryService::Authorized(const ApiRequest& req) const {
  if (options_.admin_token.empty()) return false;
  std::string given;
  if (auto it = req.headers.find("authorization"); it != req.headers.end()) {
    constexpr std::string_view kBearer = "Bearer ";
    if (it->second.rfind(kBearer, 0) == 0) given = it->second.substr(kBearer.size());
  } else if (auto it2 = req.headers.find("x-admin-token"); it2 != req.headers.end()) {
    given = it2->second;
  }
  if (given.size() != options_.admin_token.size()) return false;
  unsigned char diff = 0;
  for (size_t i = 0; i < given.size(); ++i) {
    diff |= static_cast<unsigned char>(given[i] ^ options_.admin_token[i]);
  }
  return diff == 0;
}

ApiResponse QueryService::Handle(const ApiRequest& request) {
  try {
    return Dispatch(request);
  } catch (const SnapshotNotFound& e) {
    return Error(ApiStatus::kNotFound, e.what());
  } catch (const std::exception& e) {
    return Error(ApiStatus::kUpstreamError, e.what(), "", 500);
  }
}

ApiResponse QueryService::Dispatch(const ApiRequest& req) {
  auto parts = SplitPath(req.path);
  if (parts.size() < 3 || parts[0] != "api" || parts[1] != "v1") {
    return Error(ApiStatus::kNotFound, "unknown path " + req.path);
  }
  const std::string& tool = parts[2];
  if (tool == "admin") {
    if (req.method != "POST") return Error(ApiStatus::kInvalidInput, "admin endpoints require POST", "", 405);
    if (!Authorized(req)) return Error(ApiStatus::kInvalidInput, "admin token missing or wrong", "", 401);
    if (parts.size() == 4 && parts[3] == "ingest") return AdminIngest(req);
    if (parts.size() == 4 && parts[3] == "analyze") return AdminAnalyze(req);
    return Error(ApiStatus::kNotFound, "unknown admin action");
  }
  if (req.method != "GET") return Error(ApiStatus::kInvalidInput, "only GET is supported", "", 405);
  if (tool == "stats" && parts.size() == 3) return Stats(req);
  if (tool == "pooling" && parts.size() == 5) return Pooling(req, parts);
  if (tool == "hidden-intermediary" && parts.size() == 4) return Hidden(req, parts);
  if (tool == "partnerships" && parts.size() == 4) return Partnerships(req, parts);
  if (tool == "relationships" && parts.size() == 4) return Relationships(req, parts);
  if (tool == "fetch" && parts.size() == 5) return Fetch(req, parts);
  return Error(ApiStatus::kNotFound, "unknown path " + req.path);
}

ApiResponse QueryService::Pooling(const ApiRequest& req,
                                  const std::vector<std::string>& parts) {
  auto network = ValidDomain(parts[3]);
  if (!network) return Error(ApiStatus::kInvalidInput, "malformed network domain");
  const std::string& id = parts[4];
  if (!ValidId(id)) return Error(ApiStatus::kInvalidInput, "malformed account id");
  auto snap = SelectSnapshot(req);
  if (!snap) return Error(ApiStatus::kNotFound, "no snapshot ingested");
  auto ctx = Context(*snap);

  AccountLookup lookup = LookupAccount(ctx->index(), *network, id);
  json p;
  p["network"] = *network;
  p["account_id"] = id;
  p["direct_declarers"] = lookup.direct_declarers;
  p["reseller_declarers"] = lookup.reseller_declarers;
  p["seller_entry"] = lookup.seller_entry ? SellerEntryJson(*lookup.seller_entry) : json(nullptr);
  const auto& pools = ctx->pools();
  auto it = std::lower_bound(pools.begin(), pools.end(), AccountKey{*network, id},
                             [](const Pool& pool, const AccountKey& k) { return pool.key() < k; });
  if (it != pools.end() && it->key() == AccountKey{*network, id}) {
    p["pool"] = {{"size", it->size()},
                 {"members", it->members},
                 {"tags", TagsJson(it->tags)}};
  } else {
    p["pool"] = nullptr;
  }
  // RESELLER declarations of a key that others declare DIRECT.
  p["reseller_discrepancy"] =
      lookup.direct_declarers.empty() ? std::set<std::string>{} : lookup.reseller_declarers;
  return Ok(ctx->snapshot_id(), std::move(p));
}

ApiResponse QueryService::Hidden(const ApiRequest& req,
                                 const std::vector<std::string>& parts) {
  auto domain = ValidDomain(parts[3]);
  if (!domain) return Error(ApiStatus::kInvalidInput, "malformed domain");
  auto snap = SelectSnapshot(req);
  if (!snap) return Error(ApiStatus::kNotFound, "no snapshot ingested");
  auto ctx = Context(*snap);
  auto ev = EvaluateHiddenIntermediary(ctx->view(), ctx->graph(), *domain, ctx->verified());
  json p;
  p["domain"] = *domain;
  p["criteria"] = {
      {"serves_sellers_json", ev.criteria.serves_sellers_json},
      {"has_named_client", ev.criteria.has_named_client},
      {"listed_as_publisher", ev.criteria.listed_as_publisher},
      {"listed_as_intermediary", ev.criteria.listed_as_intermediary},
  };
  json failed = json::array();
  if (!ev.criteria.serves_sellers_json) failed.push_back("serves_sellers_json");
  if (!ev.criteria.has_named_client) failed.push_back("has_named_client");
  if (!ev.criteria.listed_as_publisher) failed.push_back("listed_as_publisher");
  if (!ev.criteria.listed_as_intermediary) failed.push_back("listed_as_intermediary");
  p["failed_criteria"] = failed;
  p["is_hidden_intermediary"] = ev.finding.has_value();
  if (ev.finding) {
    const auto& f = *ev.finding;
    p["finding"] = {{"subject", f.subject},
                    {"publisher_listings", ListingsJson(f.publisher_listings)},
                    {"intermediary_listings", ListingsJson(f.intermediary_listings)},
                    {"named_client_count", f.named_client_count},
                    {"verified", f.verified},
                    {"weak", f.weak},
                    {"snapshot_id", f.snapshot_id}};
  } else {
    p["finding"] = nullptr;
  }
  return Ok(ctx->snapshot_id(), std::move(p));
}

ApiResponse QueryService::Partnerships(const ApiRequest& req,
                                       const std::vector<std::string>& parts) {
  auto domain = ValidDomain(parts[3]);
  if (!domain) return Error(ApiStatus::kInvalidInput, "malformed domain");
  auto snap = SelectSnapshot(req);
  if (!snap) return Error(ApiStatus::kNotFound, "no snapshot ingested");
  auto ctx = Context(*snap);
  PartnershipResult r = FindPartnerships(ctx->index(), *domain);
  json partners = json::object();
  for (const auto& [partner, keys] : r.partners) {
    json a = json::array();
    for (const auto& [network, id] : keys) a.push_back({{"network", network}, {"account_id", id}});
    partners[partner] = a;
  }
  return Ok(ctx->snapshot_id(), {{"query_domain", r.query_domain}, {"partners", partners}});
}

ApiResponse QueryService::Relationships(const ApiRequest& req,
                                        const std::vector<std::string>& parts) {
  auto domain = ValidDomain(parts[3]);
  if (!domain) return Error(ApiStatus::kInvalidInput, "malformed domain");
  auto snap = SelectSnapshot(req);
  if (!snap) return Error(ApiStatus::kNotFound, "no snapshot ingested");
  auto ctx = Context(*snap);
  RelationshipResult r = FindRelationships(ctx->index(), ctx->graph(), *domain);
  json claimed = json::array();
  for (const auto& c : r.claimed_networks) {
    claimed.push_back({{"network", c.network},
                       {"account_id", c.account_id},
                       {"ads_type", AccountTypeName(c.ads_type)}});
  }
  json ack = json::array();
  for (const auto& a : r.acknowledging_networks) {
    ack.push_back({{"network", a.network},
                   {"seller_id", a.seller_id},
                   {"seller_type", SellerTypeName(a.seller_type)}});
  }
  return Ok(ctx->snapshot_id(), {{"domain", r.domain},
                                 {"claimed_networks", claimed},
                                 {"acknowledging_networks", ack}});
}

ApiResponse QueryService::Fetch(const ApiRequest& req,
                                const std::vector<std::string>& parts) {
  auto domain = ValidDomain(parts[3]);
  if (!domain) return Error(ApiStatus::kInvalidInput, "malformed domain");
  auto kind = ParseFileKind(parts[4]);
  if (!kind) return Error(ApiStatus::kInvalidInput, "file must be ads.txt or sellers.json");
  if (!options_.fetch_transport) {
    return Error(ApiStatus::kUpstreamError, "live fetch is not enabled", "", 503,
                 {{"reason", "LIVE_FETCH_DISABLED"}});
  }
  if (!client_limiter_.Allow("client:" + req.client) ||
      !target_limiter_.Allow("target:" + *domain)) {
    return Error(ApiStatus::kUpstreamError, "rate limit exceeded", "", 429,
                 {{"reason", "THROTTLED"}});
  }
  LiveFetchResult r = LiveFetchPassthrough(*domain, *kind, options_.fetch_config,
                                           *options_.fetch_transport,
                                           options_.politeness.get());
  const FetchOutcome& o = r.outcome;
  if (o.status != FetchStatus::kOk) {
    std::string why = o.detail.empty() ? std::string(FetchStatusName(o.status)) : o.detail;
    return Error(ApiStatus::kUpstreamError, "fetch failed: " + why, "", 0,
                 {{"reason", "FETCH_FAILED"},
                  {"fetch_status", FetchStatusName(o.status)},
                  {"url", o.url}});
  }
  json p;
  p["domain"] = *domain;
  p["kind"] = FileKindName(*kind);
  p["url"] = o.url;
  p["final_url"] = o.final_url ? json(*o.final_url) : json(nullptr);
  p["fetched_at"] = FormatTimestamp(o.fetched_at);
  p["fetch_status"] = FetchStatusName(o.status);
  std::string body;
  p["body_sanitized"] = SanitizeUtf8(o.body.value_or(""), body);
  p["body"] = std::move(body);
  json parsed;
  if (r.ads_txt) {
    const AdsTxtFile& f = *r.ads_txt;
    json records = json::array();
    for (const auto& rec : f.records) {
      records.push_back({{"network", rec.ad_system_domain},
                         {"account_id", rec.account_id},
                         {"ads_type", AccountTypeName(rec.account_type)}});
    }
    parsed = {{"record_count", f.records.size()},
              {"variable_count", f.variables.size()},
              {"records", records},
              {"findings", FindingsJson(f.parse_findings)}};
  } else if (r.sellers_json) {
    const SellersFile& f = *r.sellers_json;
    size_t confidential = 0;
    for (const auto& e : f.entries) confidential += e.is_confidential;
    auto findings = f.parse_findings;
    auto lint = LintSellersFile(f);
    findings.insert(findings.end(), lint.begin(), lint.end());
    parsed = {{"structurally_valid", IsStructurallyValid(f)},
              {"entry_count", f.entries.size()},
              {"confidential_count", confidential},
              {"findings", FindingsJson(findings)}};
  }
  p["parsed"] = parsed;
  return Ok("live", std::move(p));
}

ApiResponse QueryService::Stats(const ApiRequest& req) {
  json p;
  auto snap = SelectSnapshot(req);
  auto infos = store_.ListSnapshots();
  p["snapshot_count"] = infos.size();
  json series = json::array();
  for (const auto& info : infos) {
    auto doc = store_.LoadAnalysis(info.snapshot_id);
    if (!doc) continue;
    series.push_back({{"snapshot_id", info.snapshot_id},
                      {"finished_at", FormatTimestamp(info.finished_at)},
                      {"verified_hidden_intermediaries", VerifiedCountFromAnalysis(*doc)}});
  }
  CorpusCounts c;
  json top_ids = json::array();
  json top_hidden = json::array();
  std::string id;
  if (snap) {
    auto ctx = Context(*snap);
    id = ctx->snapshot_id();
    c = CountCorpus(*ctx);
    const auto& over = ctx->overused_ids();
    for (size_t i = 0; i < over.size() && i < options_.stats_top_n; ++i) {
      top_ids.push_back({{"network", over[i].network},
                         {"account_id", over[i].account_id},
                         {"declared_owner", over[i].declared_owner
                                                ? json(*over[i].declared_owner)
                                                : json(nullptr)},
                         {"website_count", over[i].website_count}});
    }
    std::vector<const HiddenIntermediaryFinding*> hidden;
    for (const auto& f : ctx->hidden_intermediaries()) hidden.push_back(&f);
    std::stable_sort(hidden.begin(), hidden.end(), [](auto* a, auto* b) {
      return a->publisher_listings.size() > b->publisher_listings.size();
    });
    for (size_t i = 0; i < hidden.size() && i < options_.stats_top_n; ++i) {
      top_hidden.push_back({{"subject", hidden[i]->subject},
                            {"verified", hidden[i]->verified},
                            {"publisher_listing_count", hidden[i]->publisher_listings.size()},
                            {"intermediary_listing_count",
                             hidden[i]->intermediary_listings.size()}});
    }
  }
  p["seed_count"] = c.seed_count;
  p["ads_txt_files"] = c.ads_txt_files;
  p["sellers_json_files"] = c.sellers_json_files;
  p["ads_txt_records"] = c.ads_txt_records;
  p["seller_entries"] = c.seller_entries;
  p["fetch_failures"] = c.fetch_failures;
  p["pool_count"] = c.pool_count;
  p["dark_pool_count"] = c.dark_pool_count;
  p["mismatch_count"] = c.mismatch_count;
  p["unacknowledged_count"] = c.unacknowledged_count;
  p["hidden_intermediary_count"] = c.hidden_intermediary_count;
  p["verified_hidden_intermediary_count"] = c.verified_hidden_intermediary_count;
  p["copied_file_groups"] = c.copied_file_groups;
  p["top_overused_ids"] = top_ids;
  p["top_hidden_intermediaries"] = top_hidden;
  p["verified_hidden_intermediaries_series"] = series;
  return Ok(id, std::move(p));
}

ApiResponse QueryService::AdminIngest(const ApiRequest& req) {
  json body = json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object() || !body.contains("manifests") ||
      !body["manifests"].is_array() || body["manifests"].empty()) {
    return Error(ApiStatus::kInvalidInput, "body must be {\"manifests\": [paths]}");
  }
  std::optional<CrawlSnapshot> merged;
  for (const auto& m : body["manifests"]) {
    if (!m.is_string()) return Error(ApiStatus::kInvalidInput, "manifest paths must be strings");
    CrawlSnapshot s;
    try {
      s = LoadStagedSnapshot(m.get<std::string>(), store_.blobs());
    } catch (const std::exception& e) {
      return Error(ApiStatus::kInvalidInput, e.what());
    }
    merged = merged ? MergeSnapshots(*merged, s) : std::move(s);
  }
  std::string id = store_.Ingest(*merged);
  return Ok(id, {{"snapshot_id", id}});
}

ApiResponse QueryService::AdminAnalyze(const ApiRequest& req) {
  json body = req.body.empty() ? json::object() : json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    return Error(ApiStatus::kInvalidInput, "body must be a JSON object");
  }
  std::optional<std::string> id;
  if (body.contains("snapshot") && body["snapshot"].is_string()) {
    id = body["snapshot"].get<std::string>();
  } else {
    id = store_.LatestSnapshotId();
  }
  if (!id) return Error(ApiStatus::kNotFound, "no snapshot ingested");
  std::string doc = Analyze(*id);
  return Ok(*id, json::parse(doc).at("counts"));
}

}  // namespace adaudit
