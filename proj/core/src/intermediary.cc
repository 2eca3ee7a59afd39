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

#include "adaudit/intermediary.h"

#include <algorithm>

namespace adaudit {

namespace {

bool Conflicts(AccountType ads, SellerType seller) {
  return (ads == AccountType::kDirect && seller == SellerType::kIntermediary) ||
         (ads == AccountType::kReseller && seller == SellerType::kPublisher);
}

}  // namespace

MismatchReport DetectTypeMismatches(const SellersView& view) {
  MismatchReport report;
  const EntryIndex& index = view.index();
  for (const auto& [key, declarers] : index.by_account()) {
    const auto& [network, id] = key;
    const SellersFile* file = view.File(network);
    if (!file) continue;
    std::map<AccountType, std::set<std::string>> by_type;
    for (const auto& [publisher, type] : declarers) by_type[type].insert(publisher);

    auto entry = index.by_seller().find(key);
    if (entry == index.by_seller().end()) {
      for (auto& [type, pubs] : by_type) {
        report.unacknowledged.push_back({network, id, type, std::move(pubs)});
      }
      continue;
    }
    for (auto& [type, pubs] : by_type) {
      if (Conflicts(type, entry->second.seller_type)) {
        report.mismatches.push_back(
            {network, id, type, entry->second.seller_type, std::move(pubs)});
      }
    }
  }
  return report;
}

std::vector<UnresolvableIntermediary> DetectUnresolvableIntermediaries(
    const SellersView& view, const RelationshipGraph& graph) {
  std::map<std::string, size_t> counts;
  for (const auto& e : graph.edges) {
    if (e.seller_type == SellerType::kIntermediary) ++counts[e.subject];
  }
  const CrawlSnapshot& snap = view.index().snapshot();
  std::vector<UnresolvableIntermediary> out;
  for (const auto& [domain, n] : counts) {
    if (view.Serves(domain) || view.excluded().count(domain)) continue;
    bool failed = snap.failures.count({domain, FileKind::kSellersJson}) > 0;
    auto file = snap.sellers_files.find(domain);
    bool unparseable =
        file != snap.sellers_files.end() && !IsStructurallyValid(file->second);
    if (failed || unparseable) out.push_back({domain, n});
  }
  return out;
}

std::map<std::string, ConfidentialityRow> ConfidentialityStats(
    const SellersView& view) {
  std::map<std::string, ConfidentialityRow> out;
  for (const auto& network : view.ServingDomains()) {
    ConfidentialityRow row;
    for (const auto& e : view.File(network)->entries) {
      ++row.total;
      row.confidential += e.is_confidential;
    }
    row.fraction = row.total ? Ratio::Of(static_cast<int64_t>(row.confidential),
                                         static_cast<int64_t>(row.total))
                             : Ratio{};
    out[network] = row;
  }
  return out;
}

HiddenIntermediaryEvaluation EvaluateHiddenIntermediary(
    const SellersView& view, const RelationshipGraph& graph,
    const std::string& subject, const VerifiedNetworkList& verified) {
  HiddenIntermediaryEvaluation ev;
  HiddenIntermediaryFinding f;
  f.subject = subject;
  f.snapshot_id = view.snapshot_id();

  if (const SellersFile* own = view.File(subject)) {
    ev.criteria.serves_sellers_json = true;
    f.named_client_count = static_cast<size_t>(
        std::count_if(own->entries.begin(), own->entries.end(),
                      [](const SellerEntry& e) { return e.IsNamed(); }));
    ev.criteria.has_named_client = f.named_client_count > 0;
  }

  bool publisher_strong = false;
  bool intermediary_strong = false;
  for (const RelationshipEdge* e : graph.EdgesTo(subject)) {
    if (e->issuer == subject) continue;
    Listing l{e->issuer, e->seller_id};
    switch (e->seller_type) {
      case SellerType::kPublisher:
        f.publisher_listings.insert(l);
        publisher_strong = true;
        break;
      case SellerType::kIntermediary:
        f.intermediary_listings.insert(l);
        intermediary_strong = true;
        break;
      case SellerType::kBoth:
        f.publisher_listings.insert(l);
        f.intermediary_listings.insert(l);
        break;
    }
  }
  ev.criteria.listed_as_publisher = !f.publisher_listings.empty();
  ev.criteria.listed_as_intermediary = !f.intermediary_listings.empty();
  if (ev.criteria.AllHold()) {
    f.verified = verified.domains.count(subject) > 0;
    f.weak = !publisher_strong || !intermediary_strong;
    ev.finding = std::move(f);
  }
  return ev;
}

std::vector<HiddenIntermediaryFinding> DetectHiddenIntermediaries(
    const SellersView& view, const RelationshipGraph& graph,
    const VerifiedNetworkList& verified) {
  std::vector<HiddenIntermediaryFinding> out;
  // Only subjects serving a file can satisfy the first criterion.
  for (const auto& subject : view.ServingDomains()) {
    auto ev = EvaluateHiddenIntermediary(view, graph, subject, verified);
    if (ev.finding) out.push_back(std::move(*ev.finding));
  }
  return out;
}

std::vector<DistributedIdRow> FlagDistributedPublisherIds(
    const SellersView& view, const RelationshipGraph& graph,
    const VerifiedNetworkList& verified, size_t threshold) {
  if (threshold < 2) throw std::invalid_argument("threshold must be >= 2");
  std::vector<DistributedIdRow> out;
  for (const auto& e : graph.edges) {
    if (e.seller_type != SellerType::kPublisher) continue;
    bool network = view.Serves(e.subject) || verified.domains.count(e.subject);
    if (!network) continue;
    auto lookup = LookupAccount(view.index(), e.issuer, e.seller_id);
    size_t n = lookup.direct_declarers.size();
    if (n > threshold) out.push_back({e.issuer, e.seller_id, e.subject, n});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.direct_declarer_count > b.direct_declarer_count;
  });
  return out;
}

std::map<std::string, IndirectClients> FindIndirectClients(
    const std::vector<HiddenIntermediaryFinding>& findings,
    const SellersView& view, const ObjectionableLists& lists) {
  std::map<std::string, IndirectClients> out;
  for (const auto& f : findings) {
    IndirectClients& c = out[f.subject];
    const SellersFile* file = view.File(f.subject);
    if (!file) continue;
    for (const auto& e : file->entries) {
      if (!e.domain) continue;
      if (lists.misinformation.count(*e.domain)) c.fake_news.insert(*e.domain);
      if (lists.piracy.count(*e.domain)) c.piracy.insert(*e.domain);
      if (lists.illegal.count(*e.domain)) c.illegal.insert(*e.domain);
    }
  }
  return out;
}

TemporalDiff DiffFindings(const FindingSet& a, const FindingSet& b,
                          bool verified_only) {
  if (a.verified_list_digest != b.verified_list_digest) {
    throw NonComparableError("findings were computed with different verified lists");
  }
  auto collect = [&](const FindingSet& s) {
    std::map<std::string, size_t> out;
    for (const auto& f : s.findings) {
      if (verified_only && !f.verified) continue;
      out[f.subject] = f.publisher_listings.size();
    }
    return out;
  };
  auto in_a = collect(a);
  auto in_b = collect(b);
  TemporalDiff d;
  for (const auto& [subject, n] : in_b) {
    (in_a.count(subject) ? d.persisted : d.appeared).insert(subject);
  }
  for (const auto& [subject, n] : in_a) {
    if (!in_b.count(subject)) d.disappeared.insert(subject);
  }
  auto size_in = [](const std::map<std::string, size_t>& m, const std::string& s) {
    auto it = m.find(s);
    return it == m.end() ? 0L : static_cast<long>(it->second);
  };
  for (const auto& s : d.appeared) d.per_subject_listing_delta[s] = size_in(in_b, s);
  for (const auto& s : d.disappeared) d.per_subject_listing_delta[s] = -size_in(in_a, s);
  for (const auto& s : d.persisted) {
    d.per_subject_listing_delta[s] = size_in(in_b, s) - size_in(in_a, s);
  }
  return d;
}

}  // namespace adaudit
