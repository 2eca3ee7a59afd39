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

#include "synth.h"

#include <fmt/format.h>

#include "json.hpp"

namespace adaudit::testing {

namespace {

FetchedBody Body(const std::string& domain, FileKind kind, const std::string& text) {
  FetchedBody b;
  b.url = DefaultUrl(domain, kind);
  b.body = text;
  return b;
}

template <typename T>
const T& Pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

SnapshotBuilder& SnapshotBuilder::Ads(const std::string& domain, const std::string& text) {
  snap_.AddBody(domain, FileKind::kAdsTxt, Body(domain, FileKind::kAdsTxt, text));
  ++snap_.seed_count;
  return *this;
}

SnapshotBuilder& SnapshotBuilder::Sellers(const std::string& domain,
                                          const std::string& text) {
  snap_.AddBody(domain, FileKind::kSellersJson, Body(domain, FileKind::kSellersJson, text));
  return *this;
}

SnapshotBuilder& SnapshotBuilder::Failure(const std::string& domain, FileKind kind,
                                          FetchStatus status) {
  FetchOutcome o;
  o.url = DefaultUrl(domain, kind);
  o.status = status;
  snap_.AddFailure(domain, kind, o);
  if (kind == FileKind::kSellersJson) snap_.sellers_provenance.try_emplace(domain, "");
  return *this;
}

CrawlSnapshot SnapshotBuilder::Take() {
  snap_.Seal();
  return std::move(snap_);
}

std::shared_ptr<const CrawlSnapshot> SnapshotBuilder::Build() {
  return std::make_shared<const CrawlSnapshot>(Take());
}

std::string SellersText(const std::vector<SellerSpec>& entries,
                        const std::string& contact_email) {
  nlohmann::ordered_json doc;
  doc["version"] = "1.0";
  if (!contact_email.empty()) doc["contact_email"] = contact_email;
  doc["sellers"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["seller_id"] = e.seller_id;
    j["seller_type"] = e.seller_type;
    if (e.confidential) j["is_confidential"] = 1;
    if (!e.name.empty()) j["name"] = e.name;
    if (!e.domain.empty()) j["domain"] = e.domain;
    doc["sellers"].push_back(j);
  }
  return doc.dump(1);
}

RandomAdsCorpus GenerateAdsCorpus(std::mt19937_64& rng) {
  RandomAdsCorpus c;
  std::uniform_int_distribution<int> pubs(2, 40), nets(1, 5), ids(1, 6), per_pub(1, 6);
  std::bernoulli_distribution direct(0.75);
  int n_pub = pubs(rng), n_net = nets(rng), n_id = ids(rng);
  SnapshotBuilder b;
  for (int p = 0; p < n_pub; ++p) {
    std::string pub = fmt::format("site{}.test", p);
    c.publishers.push_back(pub);
    std::string text = "# generated\n";
    int n = per_pub(rng);
    for (int i = 0; i < n; ++i) {
      AdsRecordTruth r{pub, fmt::format("net{}.com", std::uniform_int_distribution<int>(0, n_net - 1)(rng)),
                       fmt::format("id-{}", std::uniform_int_distribution<int>(0, n_id - 1)(rng)),
                       direct(rng)};
      text += fmt::format("{}, {}, {}\n", r.network, r.account_id, r.direct ? "DIRECT" : "RESELLER");
      c.records.insert(r);
    }
    b.Ads(pub, text);
  }
  c.snapshot = b.Build();
  return c;
}

std::map<std::string, OwnerResolution> GenerateOwners(
    std::mt19937_64& rng, const std::vector<std::string>& publishers) {
  static const std::vector<std::string> kOrgs = {"acme media", "globex corp", "initech ltd",
                                                 "umbrella news"};
  std::uniform_int_distribution<int> status(0, 9);
  std::uniform_int_distribution<size_t> org_count(1, kOrgs.size());
  size_t orgs = org_count(rng);
  std::map<std::string, OwnerResolution> out;
  for (const auto& p : publishers) {
    OwnerResolution r;
    r.domain = p;
    switch (status(rng)) {
      case 0: continue;  // never looked up
      case 1: r.status = OwnerStatus::kRedacted; break;
      case 2: r.status = OwnerStatus::kUnparseable; break;
      case 3: r.status = OwnerStatus::kMissing; break;
      default:
        r.status = OwnerStatus::kResolved;
        r.normalized_org = kOrgs[std::uniform_int_distribution<size_t>(0, orgs - 1)(rng)];
    }
    out[p] = r;
  }
  return out;
}

RandomSellersGraph GenerateSellersGraph(std::mt19937_64& rng) {
  static const std::vector<std::string> kTypes = {"PUBLISHER", "INTERMEDIARY", "BOTH"};
  std::uniform_int_distribution<int> nets(2, 12), entries(0, 10);
  std::bernoulli_distribution has_file(0.8), confidential(0.25), named(0.7), verified(0.5),
      fail(0.5);
  int n = nets(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(fmt::format("ssp{}.net", i));
  names.push_back("publisher-a.com");
  names.push_back("publisher-b.com");

  RandomSellersGraph g;
  SnapshotBuilder b;
  for (int i = 0; i < n; ++i) {
    const std::string& issuer = names[i];
    if (verified(rng)) g.verified.domains.insert(issuer);
    if (!has_file(rng)) {
      if (fail(rng)) b.Failure(issuer, FileKind::kSellersJson, FetchStatus::kNotFound);
      continue;
    }
    std::vector<SellerSpec> specs;
    int k = entries(rng);
    for (int e = 0; e < k; ++e) {
      SellerSpec s;
      s.seller_id = fmt::format("{}-{}", i, e);
      s.seller_type = Pick(rng, kTypes);
      s.confidential = confidential(rng);
      if (!s.confidential || named(rng)) s.domain = Pick(rng, names);
      if (!s.confidential && named(rng)) s.name = "Seller " + s.seller_id;
      specs.push_back(s);
    }
    b.Sellers(issuer, SellersText(specs, "ops@" + issuer));
  }
  g.snapshot = b.Build();
  return g;
}

TemporalFixture BuildTemporalFixture(const std::vector<std::string>& verified_subjects,
                                     const std::vector<std::string>& unverified_subjects,
                                     const std::vector<std::string>& verified_list) {
  SnapshotBuilder b;
  std::vector<SellerSpec> as_publisher, as_intermediary;
  auto add_subject = [&](const std::string& subject, size_t i) {
    as_publisher.push_back({fmt::format("p{}", i), "PUBLISHER", subject, "", false});
    as_intermediary.push_back({fmt::format("i{}", i), "INTERMEDIARY", subject, "", false});
    b.Sellers(subject, SellersText({{"c1", "PUBLISHER", "client-" + subject, "Client", false}}));
  };
  size_t i = 0;
  for (const auto& s : verified_subjects) add_subject(s, i++);
  for (const auto& s : unverified_subjects) add_subject(s, i++);
  // Issuers list only the subjects; neither is itself a finding.
  b.Sellers("issuer-publisher.com", SellersText(as_publisher));
  b.Sellers("issuer-intermediary.com", SellersText(as_intermediary));
  TemporalFixture f;
  f.snapshot = b.Build();
  f.verified.domains.insert(verified_list.begin(), verified_list.end());
  return f;
}

}  // namespace adaudit::testing
