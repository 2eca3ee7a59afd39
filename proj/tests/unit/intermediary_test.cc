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

#include <gtest/gtest.h>

#include "adaudit/analysis_context.h"
#include "oracles.h"
#include "synth.h"

namespace adaudit {
namespace {

using testing::SellersText;
using testing::SnapshotBuilder;

struct Built {
  explicit Built(std::shared_ptr<const CrawlSnapshot> s)
      : snap(std::move(s)), index(snap), view(index), graph(BuildRelationshipGraph(view)) {}
  std::shared_ptr<const CrawlSnapshot> snap;
  EntryIndex index;
  SellersView view;
  RelationshipGraph graph;
};

TEST(TypeMismatch, DirectVsIntermediaryAndResellerVsPublisher) {
  Built b(SnapshotBuilder()
              .Ads("a.com", "n.com, 1, DIRECT\nn.com, 2, RESELLER\nn.com, 3, DIRECT\n"
                            "n.com, 4, RESELLER\nn.com, 5, DIRECT\n")
              .Sellers("n.com", SellersText({{"1", "INTERMEDIARY", "a.com", "A", false},
                                             {"2", "PUBLISHER", "a.com", "A", false},
                                             {"3", "BOTH", "a.com", "A", false},
                                             {"4", "INTERMEDIARY", "a.com", "A", false}}))
              .Build());
  auto r = DetectTypeMismatches(b.view);
  ASSERT_EQ(r.mismatches.size(), 2u);
  EXPECT_EQ(r.mismatches[0].account_id, "1");
  EXPECT_EQ(r.mismatches[1].account_id, "2");
  ASSERT_EQ(r.unacknowledged.size(), 1u);
  EXPECT_EQ(r.unacknowledged[0].account_id, "5");
}

TEST(TypeMismatch, UnservedNetworksAreNotJudged) {
  Built b(SnapshotBuilder().Ads("a.com", "n.com, 1, DIRECT\n").Build());
  auto r = DetectTypeMismatches(b.view);
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_TRUE(r.unacknowledged.empty());
}

TEST(HiddenIntermediary, AllFourCriteriaRequired) {
  Built b(SnapshotBuilder()
              .Sellers("hid.com", SellersText({{"1", "PUBLISHER", "c.com", "C", false}}))
              .Sellers("x.com", SellersText({{"10", "PUBLISHER", "hid.com", "H", false},
                                             {"11", "PUBLISHER", "nofile.com", "N", false},
                                             {"12", "INTERMEDIARY", "conf.com", "", false}}))
              .Sellers("y.com", SellersText({{"20", "INTERMEDIARY", "hid.com", "H", false},
                                             {"21", "INTERMEDIARY", "nofile.com", "N", false},
                                             {"22", "PUBLISHER", "conf.com", "", false}}))
              .Sellers("conf.com", SellersText({{"1", "PUBLISHER", "", "", true}}))
              .Build());
  VerifiedNetworkList verified;
  verified.domains = {"hid.com"};
  auto hid = EvaluateHiddenIntermediary(b.view, b.graph, "hid.com", verified);
  ASSERT_TRUE(hid.finding);
  EXPECT_TRUE(hid.finding->verified);
  EXPECT_FALSE(hid.finding->weak);
  EXPECT_EQ(hid.finding->publisher_listings, (std::set<Listing>{{"x.com", "10"}}));
  EXPECT_EQ(hid.finding->intermediary_listings, (std::set<Listing>{{"y.com", "20"}}));

  auto nofile = EvaluateHiddenIntermediary(b.view, b.graph, "nofile.com", verified);
  EXPECT_FALSE(nofile.criteria.serves_sellers_json);
  EXPECT_FALSE(nofile.finding);
  auto conf = EvaluateHiddenIntermediary(b.view, b.graph, "conf.com", verified);
  EXPECT_TRUE(conf.criteria.serves_sellers_json);
  EXPECT_FALSE(conf.criteria.has_named_client);
  EXPECT_FALSE(conf.finding);

  auto all = DetectHiddenIntermediaries(b.view, b.graph, verified);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].subject, "hid.com");
}

TEST(HiddenIntermediary, BothListingsAreWeakAndSelfListingIgnored) {
  Built b(SnapshotBuilder()
              .Sellers("hid.com", SellersText({{"1", "PUBLISHER", "c.com", "C", false},
                                               {"2", "INTERMEDIARY", "hid.com", "H", false}}))
              .Sellers("x.com", SellersText({{"10", "BOTH", "hid.com", "H", false}}))
              .Build());
  auto ev = EvaluateHiddenIntermediary(b.view, b.graph, "hid.com", {});
  ASSERT_TRUE(ev.finding);
  EXPECT_TRUE(ev.finding->weak);
  EXPECT_FALSE(ev.finding->verified);
  EXPECT_EQ(ev.finding->intermediary_listings.size(), 1u);
}

TEST(HiddenIntermediary, RandomGraphsMatchPredicateOracle) {
  std::mt19937_64 rng(99);
  size_t found = 0;
  for (int i = 0; i < 200; ++i) {
    auto g = testing::GenerateSellersGraph(rng);
    Built b(g.snapshot);
    std::set<std::string> got;
    for (const auto& f : DetectHiddenIntermediaries(b.view, b.graph, g.verified)) {
      got.insert(f.subject);
    }
    EXPECT_EQ(got, testing::HiddenIntermediaryOracle(*g.snapshot)) << "graph " << i;
    found += got.size();
  }
  EXPECT_GT(found, 0u);
}

TEST(Unresolvable, FailedOrInvalidFilesOnly) {
  Built b(SnapshotBuilder()
              .Sellers("x.com", SellersText({{"1", "INTERMEDIARY", "gone.com", "", false},
                                             {"2", "INTERMEDIARY", "html.com", "", false},
                                             {"3", "INTERMEDIARY", "never.com", "", false},
                                             {"4", "INTERMEDIARY", "gone.com", "", false}}))
              .Sellers("html.com", "<html>")
              .Failure("gone.com", FileKind::kSellersJson, FetchStatus::kNotFound)
              .Build());
  auto u = DetectUnresolvableIntermediaries(b.view, b.graph);
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[0].domain, "gone.com");
  EXPECT_EQ(u[0].listing_count, 2u);
  EXPECT_EQ(u[1].domain, "html.com");
}

TEST(Confidentiality, FractionPerNetwork) {
  Built b(SnapshotBuilder()
              .Sellers("n.com", SellersText({{"1", "PUBLISHER", "", "", true},
                                             {"2", "PUBLISHER", "a.com", "A", false},
                                             {"3", "PUBLISHER", "", "", true}}))
              .Sellers("empty.com", SellersText({}))
              .Build());
  auto rows = ConfidentialityStats(b.view);
  EXPECT_EQ(rows.at("n.com").fraction, Ratio::Of(2, 3));
  EXPECT_EQ(rows.at("empty.com").total, 0u);
}

TEST(DistributedIds, ThresholdIsStrict) {
  SnapshotBuilder sb;
  for (int i = 0; i < 4; ++i) sb.Ads("p" + std::to_string(i) + ".com", "y.com, 7, DIRECT\n");
  sb.Sellers("y.com", SellersText({{"7", "PUBLISHER", "net.com", "Net", false}}));
  sb.Sellers("net.com", SellersText({}));
  Built b(sb.Build());
  EXPECT_EQ(FlagDistributedPublisherIds(b.view, b.graph, {}, 3).size(), 1u);
  EXPECT_TRUE(FlagDistributedPublisherIds(b.view, b.graph, {}, 4).empty());
  EXPECT_THROW(FlagDistributedPublisherIds(b.view, b.graph, {}, 1), std::invalid_argument);
}

TEST(TemporalDiff, RefusesDifferentVerifiedLists) {
  FindingSet a, b;
  a.verified_list_digest = "aa";
  b.verified_list_digest = "bb";
  EXPECT_THROW(DiffFindings(a, b), NonComparableError);
}

TEST(TemporalDiff, DisappearedAndListingDeltas) {
  auto fa = testing::BuildTemporalFixture({"n1.com", "n2.com"}, {}, {"n1.com", "n2.com"});
  auto fb = testing::BuildTemporalFixture({"n2.com"}, {}, {"n1.com", "n2.com"});
  AnalysisInputs ia, ib;
  ia.verified = fa.verified;
  ib.verified = fb.verified;
  auto d = DiffFindings(AnalysisContext::Build(fa.snapshot, ia)->Findings(),
                        AnalysisContext::Build(fb.snapshot, ib)->Findings());
  EXPECT_EQ(d.disappeared, (std::set<std::string>{"n1.com"}));
  EXPECT_EQ(d.persisted, (std::set<std::string>{"n2.com"}));
  EXPECT_EQ(d.NetChange(), -1);
  EXPECT_LT(d.per_subject_listing_delta.at("n1.com"), 0);
  EXPECT_EQ(d.per_subject_listing_delta.at("n2.com"), 0);
}

}  // namespace
}  // namespace adaudit
