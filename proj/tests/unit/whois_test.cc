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

#include <gtest/gtest.h>

#include <sstream>

#include "adaudit/domain.h"

#include "test_env.h"

namespace adaudit {
namespace {

using testing::CorpusDir;
using testing::ReadText;
using testing::SourceDir;
using testing::TestDataDir;

struct Labeled {
  OwnerStatus status;
  std::string org;
  std::string raw;
};

std::vector<Labeled> LoadLabeled() {
  std::istringstream in(ReadText(TestDataDir() / "whois_labeled.txt"));
  std::vector<Labeled> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("===", 0) == 0) {
      size_t bar = line.find('|');
      Labeled l;
      l.status = *ParseOwnerStatus(std::string(TrimWhitespace(line.substr(3, bar - 3))));
      l.org = std::string(TrimWhitespace(line.substr(bar + 1)));
      out.push_back(l);
    } else if (!out.empty()) {
      out.back().raw += line + "\n";
    }
  }
  return out;
}

TEST(Whois, HandLabeledRecords) {
  auto labeled = LoadLabeled();
  ASSERT_GE(labeled.size(), 50u);
  auto keywords = LoadPrivacyKeywords(SourceDir() / "data" / "privacy_keywords.txt");
  size_t correct = 0;
  for (size_t i = 0; i < labeled.size(); ++i) {
    const auto& l = labeled[i];
    WhoisRecord rec;
    rec.domain = "case" + std::to_string(i) + ".test";
    rec.raw_text = l.raw;
    rec.retrieved = !TrimWhitespace(l.raw).empty();
    auto r = ResolveOwner(rec, keywords);
    bool ok = r.status == l.status &&
              (l.status != OwnerStatus::kResolved || r.normalized_org == l.org);
    EXPECT_TRUE(ok) << "record " << i << " expected " << OwnerStatusName(l.status) << " '"
                    << l.org << "' got " << OwnerStatusName(r.status) << " '"
                    << r.normalized_org.value_or("") << "'\n"
                    << l.raw;
    correct += ok;
  }
  EXPECT_EQ(correct, labeled.size());
}

TEST(Whois, DefaultKeywordsMatchShippedList) {
  auto file = LoadPrivacyKeywords(SourceDir() / "data" / "privacy_keywords.txt");
  EXPECT_EQ(file.keywords, DefaultPrivacyKeywords().keywords);
}

TEST(Whois, NormalizeOrgCollapsesWhitespaceAndCase) {
  EXPECT_EQ(NormalizeOrg("  Rossiya \t SEGODNYA "), "rossiya segodnya");
}

TEST(Whois, FixtureSourceAndResolveOwners) {
  FixtureWhoisSource src(CorpusDir() / "whois");
  auto owners = ResolveOwners({"ria.ru", "sputniknews.com", "snanews.de", "gbnews.uk"}, src,
                              DefaultPrivacyKeywords());
  EXPECT_EQ(owners.at("ria.ru").status, OwnerStatus::kResolved);
  EXPECT_EQ(owners.at("ria.ru").normalized_org, "rossiya segodnya");
  EXPECT_EQ(owners.at("sputniknews.com").status, OwnerStatus::kRedacted);
  EXPECT_EQ(owners.at("snanews.de").status, OwnerStatus::kMissing);
  EXPECT_EQ(owners.at("gbnews.uk").normalized_org, "gb news limited");
  EXPECT_FALSE(src.Lookup("../etc/passwd").retrieved);
}

TEST(Whois, StatusNamesRoundTrip) {
  for (auto s : {OwnerStatus::kResolved, OwnerStatus::kRedacted, OwnerStatus::kUnparseable,
                 OwnerStatus::kTooShort, OwnerStatus::kMissing}) {
    EXPECT_EQ(ParseOwnerStatus(OwnerStatusName(s)), s);
  }
}

}  // namespace
}  // namespace adaudit
