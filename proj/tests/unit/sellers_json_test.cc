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

#include "adaudit/sellers_json.h"

#include <gtest/gtest.h>

#include "synth.h"

namespace adaudit {
namespace {

using testing::SellersText;

bool HasCode(const std::vector<ParseFinding>& fs, FindingCode c) {
  for (const auto& f : fs) {
    if (f.code == c) return true;
  }
  return false;
}

TEST(SellersJson, ParsesEntriesAndFileFields) {
  auto f = ParseSellersJson("Net.com", R"({"version":"1.0","contact_email":"a@net.com",
    "sellers":[{"seller_id":" 1 ","seller_type":"publisher","domain":"https://Pub.COM/x","name":"Pub"},
               {"seller_id":"2","seller_type":"INTERMEDIARY","is_confidential":1},
               {"seller_id":"3","seller_type":"BOTH","domain":"not a domain"}]})");
  EXPECT_EQ(f.serving_domain, "net.com");
  EXPECT_EQ(f.version, "1.0");
  EXPECT_EQ(f.contact_email, "a@net.com");
  ASSERT_EQ(f.entries.size(), 3u);
  EXPECT_EQ(f.entries[0].seller_id, "1");
  EXPECT_EQ(f.entries[0].domain, "pub.com");
  EXPECT_EQ(f.entries[0].seller_type, SellerType::kPublisher);
  EXPECT_TRUE(f.entries[1].is_confidential);
  EXPECT_FALSE(f.entries[1].IsNamed());
  EXPECT_EQ(f.entries[2].seller_type, SellerType::kBoth);
  EXPECT_FALSE(f.entries[2].domain);
  EXPECT_TRUE(HasCode(f.parse_findings, FindingCode::kInvalidEntryDomain));
  EXPECT_TRUE(IsStructurallyValid(f));
}

TEST(SellersJson, StructuralFailures) {
  auto html = ParseSellersJson("net.com", "<html>nope</html>");
  EXPECT_FALSE(IsStructurallyValid(html));
  EXPECT_TRUE(HasCode(html.parse_findings, FindingCode::kInvalidJson));
  EXPECT_EQ(html.content_hash, ContentHash::Of("<html>nope</html>"));
  auto noarr = ParseSellersJson("net.com", R"({"sellers":{}})");
  EXPECT_FALSE(IsStructurallyValid(noarr));
  EXPECT_TRUE(noarr.entries.empty());
}

TEST(SellersJson, BadEntriesAreDroppedWithFindings) {
  auto f = ParseSellersJson("net.com", R"({"sellers":[5,{"seller_type":"PUBLISHER"},
    {"seller_id":"1"},{"seller_id":"2","seller_type":"RESELLER"},
    {"seller_id":3,"seller_type":"PUBLISHER","name":"x"}]})");
  EXPECT_TRUE(HasCode(f.parse_findings, FindingCode::kEntryNotObject));
  EXPECT_TRUE(HasCode(f.parse_findings, FindingCode::kMissingSellerId));
  EXPECT_TRUE(HasCode(f.parse_findings, FindingCode::kMissingSellerType));
  EXPECT_TRUE(HasCode(f.parse_findings, FindingCode::kInvalidSellerType));
  EXPECT_TRUE(HasCode(f.parse_findings, FindingCode::kNonStringField));
  ASSERT_EQ(f.entries.size(), 1u);
  EXPECT_EQ(f.entries[0].seller_id, "3");
}

TEST(SellersJson, LintDuplicatesUnderDisclosureAndMultiClaim) {
  auto f = ParseSellersJson(
      "adyoulike.com",
      SellersText({{"1", "PUBLISHER", "facebook.com", "Facebook", false},
                   {"2", "PUBLISHER", "facebook.com", "Meta Audience", false},
                   {"3", "PUBLISHER", "facebook.com", "FACEBOOK", false},
                   {"4", "PUBLISHER", "", "", false},
                   {"4", "INTERMEDIARY", "x.com", "X", false}}));
  auto lint = LintSellersFile(f);
  EXPECT_TRUE(HasCode(lint, FindingCode::kMultiClaimDomain));
  EXPECT_TRUE(HasCode(lint, FindingCode::kDuplicateSellerId));
  EXPECT_TRUE(HasCode(lint, FindingCode::kUnderDisclosed));
  for (const auto& l : lint) {
    if (l.code == FindingCode::kMultiClaimDomain) {
      EXPECT_EQ(l.related_entries, (std::vector<size_t>{0, 1, 2}));
    }
  }
}

TEST(SellersJson, SameNameClaimsAreNotMultiClaims) {
  auto f = ParseSellersJson("n.com",
                            SellersText({{"1", "PUBLISHER", "a.com", "A Inc", false},
                                         {"2", "PUBLISHER", "a.com", "a inc", false}}));
  EXPECT_FALSE(HasCode(LintSellersFile(f), FindingCode::kMultiClaimDomain));
}

TEST(SellersJson, SerializeRoundTrip) {
  auto f = ParseSellersJson("n.com", SellersText({{"1", "BOTH", "a.com", "A", false},
                                                  {"2", "PUBLISHER", "", "", true}},
                                                 "ops@n.com"));
  auto g = ParseSellersJson("n.com", SerializeSellersJson(f));
  EXPECT_EQ(f.entries, g.entries);
  EXPECT_EQ(f.contact_email, g.contact_email);
}

TEST(SellersJson, NormalizeEntryDomain) {
  EXPECT_EQ(NormalizeEntryDomain("HTTP://www.Pub.com:8080/path"), "www.pub.com");
  EXPECT_EQ(NormalizeEntryDomain("pub.com."), "pub.com");
  EXPECT_FALSE(NormalizeEntryDomain("n/a"));
}

}  // namespace
}  // namespace adaudit
