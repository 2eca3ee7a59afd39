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

#include <gtest/gtest.h>

#include <fstream>

#include "adaudit/fixture_transport.h"
#include "synth.h"
#include "test_env.h"

namespace adaudit {
namespace {

using testing::CorpusDir;
using testing::SellersText;
using testing::TempDir;

TEST(Crawler, AdsCrawlRecordsBodiesAndFailures) {
  FixtureTransport t(CorpusDir() / "web");
  CrawlConfig c;
  auto s = CrawlAdsTxt({"gbnews.uk", "GBNEWS.UK.", "slow-publisher.com", "empty-host.com"}, c, t);
  EXPECT_EQ(s.seed_count, 3u);
  EXPECT_EQ(s.ads_files.count("gbnews.uk"), 1u);
  EXPECT_EQ(s.failures.at({"slow-publisher.com", FileKind::kAdsTxt}).status,
            FetchStatus::kTimeout);
  EXPECT_EQ(s.failures.at({"empty-host.com", FileKind::kAdsTxt}).status,
            FetchStatus::kNotFound);
  EXPECT_EQ(s.snapshot_id, s.ComputeId());
  EXPECT_TRUE(s.CheckConsistency().empty());
}

TEST(Crawler, RejectsBadConfigAndSeeds) {
  FixtureTransport t(CorpusDir() / "web");
  CrawlConfig c;
  EXPECT_THROW(CrawlAdsTxt({}, c, t), CrawlConfigError);
  EXPECT_THROW(CrawlAdsTxt({"not a domain"}, c, t), CrawlConfigError);
  c.max_recursion_depth = 0;
  EXPECT_THROW(CrawlSellersRecursive({"a.com"}, c, t), CrawlConfigError);
  c = CrawlConfig{};
  c.sellers_path_aliases["a.com"] = "nope";
  EXPECT_THROW(c.Validate(), CrawlConfigError);
}

TEST(Crawler, ResultsIndependentOfWorkerCount) {
  FixtureTransport t(CorpusDir() / "web");
  auto seeds = LoadSeedList(CorpusDir() / "seeds.csv").domains;
  CrawlConfig one, many;
  one.workers = 1;
  many.workers = 8;
  EXPECT_EQ(CrawlAdsTxt(seeds, one, t).snapshot_id, CrawlAdsTxt(seeds, many, t).snapshot_id);
}

class ChainFixture : public ::testing::Test {
 protected:
  void SetUp() override {
    for (int i = 0; i < 5; ++i) {
      std::string d = "chain" + std::to_string(i) + ".com";
      std::filesystem::create_directories(dir_.path() / d);
      std::ofstream(dir_.path() / d / "sellers.json") << SellersText(
          {{"1", "INTERMEDIARY", "chain" + std::to_string((i + 1) % 5) + ".com", "", false}});
    }
  }
  TempDir dir_;
};

TEST_F(ChainFixture, DepthBoundsRecursion) {
  FixtureTransport t(dir_.path());
  for (int depth = 1; depth <= 6; ++depth) {
    CrawlConfig c;
    c.max_recursion_depth = depth;
    InstrumentedTransport it(t);
    auto s = CrawlSellersRecursive({"chain0.com"}, c, it);
    EXPECT_EQ(s.sellers_files.size(), static_cast<size_t>(std::min(depth, 5)));
    EXPECT_EQ(it.MaxRequestsPerKey(), 1u);
    if (depth >= 3) {
      EXPECT_EQ(s.sellers_provenance.at("chain2.com"), "chain1.com");
      EXPECT_EQ(s.ProvenanceDepth("chain2.com"), 3u);
    }
  }
}

TEST_F(ChainFixture, MaxDomainsTruncates) {
  FixtureTransport t(dir_.path());
  CrawlConfig c;
  c.max_domains = 2;
  auto s = CrawlSellersRecursive({"chain0.com"}, c, t);
  EXPECT_TRUE(s.truncated);
  EXPECT_EQ(s.sellers_files.size(), 2u);
}

TEST_F(ChainFixture, AliasOverridesSellersUrl) {
  std::filesystem::create_directories(dir_.path() / "alias.com" / "feeds");
  std::ofstream(dir_.path() / "alias.com" / "feeds" / "sellers.json") << SellersText({});
  FixtureTransport t(dir_.path());
  CrawlConfig c;
  c.sellers_path_aliases["alias.com"] = "https://alias.com/feeds/sellers.json";
  auto s = CrawlSellersRecursive({"alias.com"}, c, t);
  EXPECT_EQ(s.sellers_files.count("alias.com"), 1u);
}

TEST(Crawler, LiveFetchPassthroughParses) {
  FixtureTransport t(CorpusDir() / "web");
  CrawlConfig c;
  auto r = LiveFetchPassthrough("smaato.com", FileKind::kSellersJson, c, t);
  EXPECT_EQ(r.outcome.status, FetchStatus::kOk);
  ASSERT_TRUE(r.sellers_json);
  EXPECT_FALSE(r.sellers_json->entries.empty());
  EXPECT_THROW(LiveFetchPassthrough("bad domain", FileKind::kAdsTxt, c, t), CrawlConfigError);
}

TEST(SeedList, ParsesTrancoAndPlainLines) {
  TempDir dir;
  std::ofstream(dir.path() / "s.csv") << "# c\n1,Example.com\nplain.org\n2,not a domain\n3,example.com\n";
  auto s = LoadSeedList(dir.path() / "s.csv");
  EXPECT_EQ(s.domains, (std::vector<std::string>{"example.com", "plain.org"}));
  EXPECT_EQ(s.skipped, 1u);
  EXPECT_THROW(LoadSeedList(dir.path() / "missing"), std::runtime_error);
}

}  // namespace
}  // namespace adaudit
