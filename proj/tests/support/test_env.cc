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

#include "test_env.h"

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "adaudit/crawler.h"
#include "adaudit/fixture_transport.h"

namespace adaudit::testing {

namespace fs = std::filesystem;

fs::path SourceDir() { return ADAUDIT_SOURCE_DIR; }
fs::path CorpusDir() { return SourceDir() / "fixtures" / "corpus"; }
fs::path TestDataDir() { return SourceDir() / "tests" / "data"; }

TempDir::TempDir(const std::string& tag) {
  std::random_device rd;
  for (int attempt = 0; attempt < 100; ++attempt) {
    fs::path p = fs::temp_directory_path() /
                 (tag + "-" + std::to_string(rd()) + std::to_string(attempt));
    if (fs::create_directory(p)) {
      path_ = p;
      return;
    }
  }
  throw std::runtime_error("cannot create temp dir");
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string ReadText(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CrawlSnapshot CrawlCorpus() {
  FixtureTransport transport(CorpusDir() / "web");
  CrawlConfig config;
  auto ads = CrawlAdsTxt(LoadSeedList(CorpusDir() / "seeds.csv").domains, config, transport);
  std::vector<std::string> seeds = LoadSeedList(CorpusDir() / "sellers_seeds.txt").domains;
  std::set<std::string> seen(seeds.begin(), seeds.end());
  for (const auto& [domain, file] : ads.ads_files) {
    for (const auto& r : file.records) {
      if (seen.insert(r.ad_system_domain).second) seeds.push_back(r.ad_system_domain);
    }
  }
  auto sellers = CrawlSellersRecursive(seeds, config, transport);
  CrawlSnapshot merged = MergeSnapshots(ads, sellers);
  merged.Seal();
  return merged;
}

AnalysisInputs CorpusInputs(WhoisSource* whois) {
  fs::path lists = CorpusDir() / "lists";
  AnalysisInputs in;
  in.verified = LoadDomainList(lists / "verified_networks.txt");
  in.objectionable = LoadObjectionableLists({lists / "misinformation.txt"},
                                            {lists / "piracy.txt"},
                                            {lists / "illegal.txt"});
  in.ranks = LoadRankTable(CorpusDir() / "tranco.csv");
  in.privacy_keywords = LoadPrivacyKeywords(SourceDir() / "data" / "privacy_keywords.txt");
  in.whois = whois;
  return in;
}

}  // namespace adaudit::testing
