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

#include "adaudit/entry_index.h"

#include <gtest/gtest.h>

#include "synth.h"

namespace adaudit {
namespace {

using testing::SellersText;
using testing::SnapshotBuilder;

TEST(EntryIndex, GroupsDeclarationsByAccount) {
  auto snap = SnapshotBuilder()
                  .Ads("a.com", "net.com, 1, DIRECT\nnet.com, 1, RESELLER\n")
                  .Ads("b.com", "NET.com, 1, direct\nother.com, 9, RESELLER\n")
                  .Sellers("net.com", SellersText({{"1", "PUBLISHER", "a.com", "A", false},
                                                   {"1", "INTERMEDIARY", "x.com", "X", false}}))
                  .Build();
  EntryIndex idx(snap);
  EXPECT_EQ(idx.record_count(), 4u);
  auto l = LookupAccount(idx, "net.com", "1");
  EXPECT_EQ(l.direct_declarers, (std::set<std::string>{"a.com", "b.com"}));
  EXPECT_EQ(l.reseller_declarers, (std::set<std::string>{"a.com"}));
  ASSERT_TRUE(l.seller_entry);
  EXPECT_EQ(l.seller_entry->domain, "a.com");  // first entry per id
  auto none = LookupAccount(idx, "net.com", "2");
  EXPECT_TRUE(none.direct_declarers.empty());
  EXPECT_FALSE(none.seller_entry);
}

TEST(CopyDetection, ForeignContactGroupsAreExcludedEntirely) {
  std::string body = SellersText({{"1", "PUBLISHER", "p.com", "P", false}}, "sellers@google.com");
  auto snap = SnapshotBuilder()
                  .Sellers("copy1.com", body)
                  .Sellers("copy2.com", body)
                  .Sellers("unique.com", SellersText({}))
                  .Take();
  auto groups = DetectCopiedSellersFiles(snap);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_TRUE(groups[0].foreign_contact);
  EXPECT_FALSE(groups[0].genuine_owner);
  EXPECT_EQ(ExcludedCopyDomains(groups), (std::set<std::string>{"copy1.com", "copy2.com"}));
}

TEST(CopyDetection, GenuineOwnerIsKept) {
  std::string body = SellersText({{"1", "PUBLISHER", "p.com", "P", false}}, "ops@owner.com");
  auto snap = SnapshotBuilder().Sellers("owner.com", body).Sellers("mirror.com", body).Take();
  auto groups = DetectCopiedSellersFiles(snap);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].genuine_owner, "owner.com");
  EXPECT_EQ(ExcludedCopyDomains(groups), (std::set<std::string>{"mirror.com"}));
}

TEST(CopyDetection, InvalidFilesAreNotGrouped) {
  auto snap = SnapshotBuilder().Sellers("a.com", "<html>").Sellers("b.com", "<html>").Take();
  EXPECT_TRUE(DetectCopiedSellersFiles(snap).empty());
}

TEST(ExtractDomains, FindsHostsInFreeText) {
  auto d = ExtractDomains("Contact: 1 Main St, see https://www.Example.com/about or mail x@y.org");
  EXPECT_TRUE(d.count("www.example.com"));
  EXPECT_TRUE(d.count("y.org"));
}

}  // namespace
}  // namespace adaudit
