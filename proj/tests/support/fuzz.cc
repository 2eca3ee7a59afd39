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

#include "fuzz.h"

#include <fmt/format.h>

#include <vector>

#include "adaudit/ads_txt.h"
#include "adaudit/sellers_json.h"

namespace adaudit::testing {

namespace {

template <typename T>
const T& Pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

bool Chance(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

std::string RandomBytes(std::mt19937_64& rng, size_t max_len) {
  std::string s(std::uniform_int_distribution<size_t>(0, max_len)(rng), '\0');
  for (auto& c : s) c = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
  return s;
}

std::string Mutate(std::mt19937_64& rng, std::string s) {
  int n = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int i = 0; i < n && !s.empty(); ++i) {
    size_t pos = std::uniform_int_distribution<size_t>(0, s.size() - 1)(rng);
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0: s[pos] = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng)); break;
      case 1: s.erase(pos, std::uniform_int_distribution<size_t>(1, 8)(rng)); break;
      case 2: s.insert(pos, RandomBytes(rng, 6)); break;
      case 3: s.resize(pos); break;
    }
  }
  return s;
}

const std::vector<std::string> kDomains = {
    "google.com", "Pubmatic.COM", "spotx.tv.", "a.b", "x", "bad_domain.com",
    "-lead.com", "münchen.de", "xn--mnchen-3ya.de", "ad system.com", "", "sub.example.co.uk",
    "1.2.3.4", "very-long-" + std::string(70, 'a') + ".com"};
const std::vector<std::string> kIds = {
    "pub-3176064900167527", "13310", "  56848 ", "id with space", "", "ΑΒΓ", "a=b",
    "x\ty", "0", std::string(300, '9')};
const std::vector<std::string> kTypes = {"DIRECT", "RESELLER", "direct", "Reseller",
                                         "RESELLR", "", " DIRECT ", "BOTH"};
const std::vector<std::string> kVarKeys = {"contact", "SUBDOMAIN", "InventoryPartnerDomain",
                                           "ownerdomain", "managerdomain", "foo", ""};
const std::vector<std::string> kNewlines = {"\n", "\r\n", "\r"};

}  // namespace

std::string RandomAdsTxt(std::mt19937_64& rng) {
  if (Chance(rng, 0.05)) return RandomBytes(rng, 200);
  std::string out;
  if (Chance(rng, 0.1)) out += "\xEF\xBB\xBF";
  const std::string& nl = Pick(rng, kNewlines);
  int lines = std::uniform_int_distribution<int>(0, 12)(rng);
  for (int i = 0; i < lines; ++i) {
    switch (std::uniform_int_distribution<int>(0, 9)(rng)) {
      case 0: out += "# comment, with, commas"; break;
      case 1: out += ""; break;
      case 2:
        out += Pick(rng, kVarKeys) + "=" + (Chance(rng, 0.5) ? "ops@example.com" : "sub.example.com");
        break;
      case 3: out += Pick(rng, kDomains) + ", " + Pick(rng, kIds); break;
      default: {
        out += Pick(rng, kDomains) + "," + Pick(rng, kIds) + ", " + Pick(rng, kTypes);
        if (Chance(rng, 0.4)) out += ", f08c47fec0942fa0";
        if (Chance(rng, 0.1)) out += ", extra";
        if (Chance(rng, 0.1)) out += ";ext=1";
        if (Chance(rng, 0.2)) out += " # trailing";
      }
    }
    out += nl;
  }
  if (Chance(rng, 0.2)) out = Mutate(rng, out);
  return out;
}

std::string RandomSellersJson(std::mt19937_64& rng) {
  double roll = std::uniform_real_distribution<double>(0, 1)(rng);
  if (roll < 0.04) return RandomBytes(rng, 200);
  if (roll < 0.06) {
    size_t depth = std::uniform_int_distribution<size_t>(100, 20000)(rng);
    return std::string(depth, '[') + std::string(Chance(rng, 0.5) ? depth : depth / 2, ']');
  }
  if (roll < 0.08) {
    size_t depth = std::uniform_int_distribution<size_t>(100, 20000)(rng);
    std::string s = "{\"sellers\":[";
    for (size_t i = 0; i < depth; ++i) s += "{\"a\":";
    s += "1";
    for (size_t i = 0; i < depth; ++i) s += "}";
    return s + "]}";
  }
  static const std::vector<std::string> kIdVals = {
      "\"abc\"", "12345", "\"\"", "null", "{}", "\"id with space\"", "1.5", "\"\\u00e9t\\u00e9\""};
  static const std::vector<std::string> kTypeVals = {
      "\"PUBLISHER\"", "\"INTERMEDIARY\"", "\"BOTH\"", "\"publisher\"", "\"SELLER\"", "3", "null"};
  static const std::vector<std::string> kDomainVals = {
      "\"example.com\"", "\"https://Example.com:8080/path\"", "\"not a domain\"", "\"\"",
      "42", "\"sub.example.co.uk.\"", "\"x\""};
  static const std::vector<std::string> kConf = {"0", "1", "true", "false", "\"1\"", "\"yes\"",
                                                 "null"};
  std::string s = "{";
  if (Chance(rng, 0.7)) s += "\"version\":\"1.0\",";
  if (Chance(rng, 0.5)) s += "\"contact_email\":\"ops@example.com\",";
  if (Chance(rng, 0.1)) s += "\"identifiers\":[{\"name\":\"TAG-ID\",\"value\":\"x\"}],";
  if (Chance(rng, 0.95)) {
    s += Chance(rng, 0.95) ? "\"sellers\":[" : "\"sellers\":{";
    int n = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int i = 0; i < n; ++i) {
      if (i) s += ",";
      if (Chance(rng, 0.05)) {
        s += "\"not an object\"";
        continue;
      }
      std::vector<std::string> fields;
      if (Chance(rng, 0.95)) fields.push_back("\"seller_id\":" + Pick(rng, kIdVals));
      if (Chance(rng, 0.95)) fields.push_back("\"seller_type\":" + Pick(rng, kTypeVals));
      if (Chance(rng, 0.3)) fields.push_back("\"is_confidential\":" + Pick(rng, kConf));
      if (Chance(rng, 0.6)) fields.push_back("\"name\":\"Name \\\"q\\\" \\n " + std::to_string(i) + "\"");
      if (Chance(rng, 0.6)) fields.push_back("\"domain\":" + Pick(rng, kDomainVals));
      if (Chance(rng, 0.1)) fields.push_back("\"ext\":{\"k\":[1,2]}");
      std::shuffle(fields.begin(), fields.end(), rng);
      s += "{";
      for (size_t f = 0; f < fields.size(); ++f) s += (f ? "," : "") + fields[f];
      s += "}";
    }
    s += s.find("\"sellers\":{") != std::string::npos ? "}" : "]";
  } else {
    s += "\"other\":1";
  }
  s += "}";
  if (Chance(rng, 0.1)) s = Mutate(rng, s);
  return s;
}

FuzzReport RunParserFuzz(size_t cases, uint64_t seed) {
  std::mt19937_64 rng(seed);
  FuzzReport r;
  auto fail = [&](const std::string& what, const std::string& input) {
    ++r.roundtrip_failures;
    if (r.first_failure.empty()) r.first_failure = what + ": " + input.substr(0, 200);
  };
  for (size_t i = 0; i < cases; ++i) {
    ++r.cases;
    bool ads = i % 2 == 0;
    std::string input = ads ? RandomAdsTxt(rng) : RandomSellersJson(rng);
    try {
      if (ads) {
        AdsTxtFile f = ParseAdsTxt("publisher.example", input);
        if (HasErrors(f.parse_findings)) continue;
        ++r.valid_cases;
        AdsTxtFile g = ParseAdsTxt("publisher.example", SerializeAdsTxt(f));
        bool same = f.records.size() == g.records.size() &&
                    f.variables.size() == g.variables.size() && !HasErrors(g.parse_findings);
        for (size_t k = 0; same && k < f.records.size(); ++k) {
          const auto& a = f.records[k];
          const auto& b = g.records[k];
          same = a.ad_system_domain == b.ad_system_domain && a.account_id == b.account_id &&
                 a.account_type == b.account_type && a.cert_authority_id == b.cert_authority_id;
        }
        for (size_t k = 0; same && k < f.variables.size(); ++k) {
          same = f.variables[k].key == g.variables[k].key &&
                 f.variables[k].value == g.variables[k].value;
        }
        if (!same) fail("ads.txt round trip", input);
      } else {
        SellersFile f = ParseSellersJson("network.example", input);
        LintSellersFile(f);
        if (!IsStructurallyValid(f) || HasErrors(f.parse_findings)) continue;
        ++r.valid_cases;
        SellersFile g = ParseSellersJson("network.example", SerializeSellersJson(f));
        if (g.entries != f.entries || g.contact_email != f.contact_email ||
            g.version != f.version || HasErrors(g.parse_findings)) {
          fail("sellers.json round trip", input);
        }
      }
    } catch (const std::exception& e) {
      ++r.exceptions;
      if (r.first_failure.empty()) r.first_failure = std::string("exception: ") + e.what();
    }
  }
  return r;
}

}  // namespace adaudit::testing
