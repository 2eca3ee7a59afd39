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

#include "adaudit/analysis_context.h"

#include <stdexcept>

#include "json.hpp"

namespace adaudit {

using json = nlohmann::ordered_json;

AnalysisContext::AnalysisContext(std::shared_ptr<const CrawlSnapshot> snapshot,
                                 const AnalysisInputs& inputs)
    : snapshot_(snapshot),
      index_(snapshot),
      view_(index_, inputs.exclude_copied_files),
      graph_(BuildRelationshipGraph(view_)),
      verified_(inputs.verified) {
  pools_ = BuildPools(index_, &inputs.objectionable);
  pool_stats_ = ComputePoolStats(pools_, DirectIdCounts(index_));

  std::set<std::string> members;
  for (const auto& p : pools_) members.insert(p.members.begin(), p.members.end());
  std::vector<std::string> to_resolve;
  for (const auto& m : members) {
    auto it = inputs.owners.find(m);
    if (it != inputs.owners.end()) {
      owners_[m] = it->second;
    } else if (inputs.whois) {
      to_resolve.push_back(m);
    }
  }
  if (!to_resolve.empty()) {
    auto resolved = ResolveOwners(to_resolve, *inputs.whois, inputs.privacy_keywords);
    owners_.insert(resolved.begin(), resolved.end());
  }
  dark_pools_ = ClassifyDarkPools(pools_, owners_);
  overused_ = FlagOverusedDirectIds(index_, inputs.overused_id_threshold);
  flows_ = RevenueFlowGraph(pools_, {});

  mismatches_ = DetectTypeMismatches(view_);
  unresolvable_ = DetectUnresolvableIntermediaries(view_, graph_);
  confidentiality_ = ConfidentialityStats(view_);
  hidden_ = DetectHiddenIntermediaries(view_, graph_, verified_);
  distributed_ = FlagDistributedPublisherIds(view_, graph_, verified_,
                                             inputs.distributed_id_threshold);
  indirect_ = FindIndirectClients(hidden_, view_, inputs.objectionable);
}

std::shared_ptr<const AnalysisContext> AnalysisContext::Build(
    std::shared_ptr<const CrawlSnapshot> snapshot, const AnalysisInputs& inputs) {
  if (!snapshot) throw std::invalid_argument("null snapshot");
  return std::shared_ptr<const AnalysisContext>(new AnalysisContext(snapshot, inputs));
}

size_t AnalysisContext::VerifiedFindingCount() const {
  size_t n = 0;
  for (const auto& f : hidden_) n += f.verified;
  return n;
}

FindingSet AnalysisContext::Findings() const {
  return FindingSet{snapshot_id(), verified_.Digest(), hidden_};
}

CorpusCounts CountCorpus(const AnalysisContext& ctx) {
  CorpusCounts c;
  const CrawlSnapshot& s = ctx.snapshot();
  c.seed_count = s.seed_count;
  c.ads_txt_files = s.ads_files.size();
  c.sellers_json_files = s.sellers_files.size();
  c.ads_txt_records = ctx.index().record_count();
  for (const auto& [d, f] : s.sellers_files) c.seller_entries += f.entries.size();
  c.fetch_failures = s.failures.size();
  c.pool_count = ctx.pools().size();
  c.dark_pool_count = ctx.dark_pools().size();
  c.mismatch_count = ctx.mismatches().mismatches.size();
  c.unacknowledged_count = ctx.mismatches().unacknowledged.size();
  c.hidden_intermediary_count = ctx.hidden_intermediaries().size();
  c.verified_hidden_intermediary_count = ctx.VerifiedFindingCount();
  c.copied_file_groups = ctx.view().copy_groups().size();
  return c;
}

namespace {

json ListingsJson(const std::set<Listing>& ls) {
  json a = json::array();
  for (const auto& [issuer, id] : ls) a.push_back({issuer, id});
  return a;
}

std::set<Listing> ListingsFrom(const json& a) {
  std::set<Listing> out;
  for (const auto& l : a) out.emplace(l.at(0).get<std::string>(), l.at(1).get<std::string>());
  return out;
}

json Parse(const std::string& doc) {
  json j = json::parse(doc, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::runtime_error("materialized analysis is not a JSON object");
  }
  return j;
}

}  // namespace

std::string MaterializeAnalysis(const AnalysisContext& ctx) {
  CorpusCounts c = CountCorpus(ctx);
  json doc;
  doc["format"] = "adaudit-analysis/1";
  doc["snapshot_id"] = ctx.snapshot_id();
  doc["verified_list_digest"] = ctx.verified().Digest();
  doc["counts"] = {
      {"seed_count", c.seed_count},
      {"ads_txt_files", c.ads_txt_files},
      {"sellers_json_files", c.sellers_json_files},
      {"ads_txt_records", c.ads_txt_records},
      {"seller_entries", c.seller_entries},
      {"fetch_failures", c.fetch_failures},
      {"pool_count", c.pool_count},
      {"dark_pool_count", c.dark_pool_count},
      {"mismatch_count", c.mismatch_count},
      {"unacknowledged_count", c.unacknowledged_count},
      {"hidden_intermediary_count", c.hidden_intermediary_count},
      {"verified_hidden_intermediary_count", c.verified_hidden_intermediary_count},
      {"copied_file_groups", c.copied_file_groups},
  };
  doc["pool_stats"] = {{"mean", ctx.pool_stats().mean.ToString()},
                       {"median", ctx.pool_stats().median.ToString()}};
  json owners = json::object();
  for (const auto& [d, o] : ctx.owners()) {
    json e = {{"status", OwnerStatusName(o.status)}};
    if (o.normalized_org) e["org"] = *o.normalized_org;
    owners[d] = e;
  }
  doc["owners"] = owners;
  json findings = json::array();
  for (const auto& f : ctx.hidden_intermediaries()) {
    findings.push_back({{"subject", f.subject},
                        {"verified", f.verified},
                        {"weak", f.weak},
                        {"named_client_count", f.named_client_count},
                        {"publisher_listings", ListingsJson(f.publisher_listings)},
                        {"intermediary_listings", ListingsJson(f.intermediary_listings)}});
  }
  doc["findings"] = findings;
  json reports = json::object();
  for (ReportKind k : AllReportKinds()) {
    ReportTable t = BuildReport(k, ctx);
    reports[std::string(ReportKindName(k))] = {{"header", t.header}, {"rows", t.rows}};
  }
  doc["reports"] = reports;
  return doc.dump();
}

std::map<std::string, OwnerResolution> OwnersFromAnalysis(const std::string& doc) {
  json j = Parse(doc);
  std::map<std::string, OwnerResolution> out;
  try {
    for (const auto& [d, e] : j.at("owners").items()) {
      OwnerResolution r;
      r.domain = d;
      auto st = ParseOwnerStatus(e.at("status").get<std::string>());
      if (!st) throw std::runtime_error("unknown owner status for " + d);
      r.status = *st;
      if (e.contains("org")) r.normalized_org = e["org"].get<std::string>();
      out[d] = r;
    }
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed owners: ") + ex.what());
  }
  return out;
}

FindingSet FindingsFromAnalysis(const std::string& doc) {
  json j = Parse(doc);
  FindingSet set;
  try {
    set.snapshot_id = j.at("snapshot_id").get<std::string>();
    set.verified_list_digest = j.at("verified_list_digest").get<std::string>();
    for (const auto& f : j.at("findings")) {
      HiddenIntermediaryFinding h;
      h.subject = f.at("subject").get<std::string>();
      h.verified = f.at("verified").get<bool>();
      h.weak = f.at("weak").get<bool>();
      h.named_client_count = f.at("named_client_count").get<size_t>();
      h.publisher_listings = ListingsFrom(f.at("publisher_listings"));
      h.intermediary_listings = ListingsFrom(f.at("intermediary_listings"));
      h.snapshot_id = set.snapshot_id;
      set.findings.push_back(std::move(h));
    }
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed findings: ") + ex.what());
  }
  return set;
}

size_t VerifiedCountFromAnalysis(const std::string& doc) {
  json j = Parse(doc);
  try {
    return j.at("counts").at("verified_hidden_intermediary_count").get<size_t>();
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed counts: ") + ex.what());
  }
}

ReportTable ReportFromAnalysis(const std::string& doc, ReportKind kind) {
  json j = Parse(doc);
  ReportTable t;
  try {
    const json& r = j.at("reports").at(std::string(ReportKindName(kind)));
    t.header = r.at("header").get<std::vector<std::string>>();
    t.rows = r.at("rows").get<std::vector<std::vector<std::string>>>();
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed report table: ") + ex.what());
  }
  return t;
}

}  // namespace adaudit
