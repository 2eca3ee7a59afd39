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

#include <map>

#include <fmt/format.h>
#include "json.hpp"

#include "adaudit/domain.h"

namespace adaudit {

namespace {

using nlohmann::json;

ParseFinding EntryFinding(Severity sev, FindingCode code, size_t index,
                          std::string message) {
  return ParseFinding{sev, code, std::move(message),
                      SourceLocation::Entry(index), {}};
}

// Returns the field rendered as a string. Numbers are accepted for ids and
// flagged; other non-string types are treated as absent.
std::optional<std::string> StringField(const json& obj, const char* key,
                                       size_t index, bool allow_number,
                                       std::vector<ParseFinding>& findings) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (allow_number && it->is_number()) {
    findings.push_back(EntryFinding(
        Severity::kWarn, FindingCode::kNonStringField, index,
        fmt::format("field '{}' is a number, expected a string", key)));
    return it->dump();
  }
  findings.push_back(EntryFinding(
      Severity::kWarn, FindingCode::kNonStringField, index,
      fmt::format("field '{}' has non-string type, ignored", key)));
  return std::nullopt;
}

bool ConfidentialFlag(const json& obj) {
  auto it = obj.find("is_confidential");
  if (it == obj.end()) return false;
  if (it->is_boolean()) return it->get<bool>();
  if (it->is_number()) return it->get<double>() != 0;
  if (it->is_string()) {
    const auto& s = it->get_ref<const std::string&>();
    return s == "1" || EqualsIgnoreCase(s, "true");
  }
  return false;
}

std::optional<std::string> FileField(const json& root, const char* key) {
  auto it = root.find(key);
  if (it == root.end()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number()) return it->dump();
  return std::nullopt;
}

std::string NormalizeName(std::string_view name) {
  std::string out;
  bool space = false;
  for (char c : TrimWhitespace(name)) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return AsciiLower(out);
}

}  // namespace

std::string_view SellerTypeName(SellerType t) {
  switch (t) {
    case SellerType::kPublisher:
      return "PUBLISHER";
    case SellerType::kIntermediary:
      return "INTERMEDIARY";
    case SellerType::kBoth:
      return "BOTH";
  }
  return "PUBLISHER";
}

std::optional<SellerType> ParseSellerType(std::string_view s) {
  s = TrimWhitespace(s);
  if (EqualsIgnoreCase(s, "PUBLISHER")) return SellerType::kPublisher;
  if (EqualsIgnoreCase(s, "INTERMEDIARY")) return SellerType::kIntermediary;
  if (EqualsIgnoreCase(s, "BOTH")) return SellerType::kBoth;
  return std::nullopt;
}

std::optional<std::string> NormalizeEntryDomain(std::string_view raw) {
  std::string_view s = TrimWhitespace(raw);
  if (size_t scheme = s.find("://"); scheme != std::string_view::npos) {
    s = s.substr(scheme + 3);
  }
  if (size_t slash = s.find_first_of("/?#"); slash != std::string_view::npos) {
    s = s.substr(0, slash);
  }
  if (size_t colon = s.find(':'); colon != std::string_view::npos) {
    s = s.substr(0, colon);
  }
  return ParseDomain(s);
}

SellersFile ParseSellersJson(std::string_view serving_domain,
                             std::string_view text) {
  SellersFile file;
  file.serving_domain = NormalizeDomain(serving_domain);
  file.content_hash = ContentHash::Of(text);

  json root = json::parse(text.begin(), text.end(), nullptr,
                          /*allow_exceptions=*/false);
  if (root.is_discarded()) {
    file.parse_findings.push_back(
        ParseFinding{Severity::kError, FindingCode::kInvalidJson,
                     "input is not valid JSON", SourceLocation::File(), {}});
    return file;
  }
  if (!root.is_object() || !root.contains("sellers") ||
      !root["sellers"].is_array()) {
    file.parse_findings.push_back(ParseFinding{
        Severity::kError, FindingCode::kMissingSellersArray,
        "top-level object with a 'sellers' array expected",
        SourceLocation::File(), {}});
    return file;
  }
  file.version = FileField(root, "version");
  file.contact_email = FileField(root, "contact_email");
  file.contact_address = FileField(root, "contact_address");

  const json& sellers = root["sellers"];
  file.entries.reserve(sellers.size());
  for (size_t i = 0; i < sellers.size(); ++i) {
    const json& e = sellers[i];
    if (!e.is_object()) {
      file.parse_findings.push_back(
          EntryFinding(Severity::kError, FindingCode::kEntryNotObject, i,
                       "sellers element is not an object"));
      continue;
    }
    auto id = StringField(e, "seller_id", i, true, file.parse_findings);
    if (id) id = std::string(TrimWhitespace(*id));
    if (!id || id->empty()) {
      file.parse_findings.push_back(EntryFinding(
          Severity::kError, FindingCode::kMissingSellerId, i,
          "entry has no seller_id, dropped"));
      continue;
    }
    auto type_raw = StringField(e, "seller_type", i, false, file.parse_findings);
    if (!type_raw) {
      file.parse_findings.push_back(EntryFinding(
          Severity::kError, FindingCode::kMissingSellerType, i,
          fmt::format("entry '{}' has no seller_type, dropped", *id)));
      continue;
    }
    auto type = ParseSellerType(*type_raw);
    if (!type) {
      file.parse_findings.push_back(EntryFinding(
          Severity::kError, FindingCode::kInvalidSellerType, i,
          fmt::format("entry '{}' has unknown seller_type '{}', dropped", *id,
                      *type_raw)));
      continue;
    }
    SellerEntry entry;
    entry.seller_id = std::move(*id);
    entry.seller_type = *type;
    entry.is_confidential = ConfidentialFlag(e);
    if (auto name = StringField(e, "name", i, false, file.parse_findings)) {
      std::string_view trimmed = TrimWhitespace(*name);
      if (!trimmed.empty()) entry.name = std::string(trimmed);
    }
    if (auto dom = StringField(e, "domain", i, false, file.parse_findings)) {
      if (!TrimWhitespace(*dom).empty()) {
        entry.domain = NormalizeEntryDomain(*dom);
        if (!entry.domain) {
          file.parse_findings.push_back(EntryFinding(
              Severity::kWarn, FindingCode::kInvalidEntryDomain, i,
              fmt::format("entry '{}' domain '{}' is not a domain name",
                          entry.seller_id, *dom)));
        }
      }
    }
    file.entries.push_back(std::move(entry));
  }
  return file;
}

bool IsStructurallyValid(const SellersFile& file) {
  for (const auto& f : file.parse_findings) {
    if (f.code == FindingCode::kInvalidJson ||
        f.code == FindingCode::kMissingSellersArray) {
      return false;
    }
  }
  return true;
}

std::vector<ParseFinding> LintSellersFile(const SellersFile& file) {
  std::vector<ParseFinding> out;

  std::map<std::string, std::vector<size_t>> by_id;
  for (size_t i = 0; i < file.entries.size(); ++i) {
    by_id[file.entries[i].seller_id].push_back(i);
  }
  for (const auto& [id, idx] : by_id) {
    if (idx.size() < 2) continue;
    out.push_back(ParseFinding{
        Severity::kError, FindingCode::kDuplicateSellerId,
        fmt::format("seller_id '{}' appears {} times", id, idx.size()),
        SourceLocation::Entry(idx.front()), idx});
  }

  for (size_t i = 0; i < file.entries.size(); ++i) {
    const auto& e = file.entries[i];
    if (!e.is_confidential && !e.name && !e.domain) {
      out.push_back(ParseFinding{
          Severity::kWarn, FindingCode::kUnderDisclosed,
          fmt::format("non-confidential entry '{}' has neither name nor domain",
                      e.seller_id),
          SourceLocation::Entry(i), {}});
    }
  }

  std::map<std::string, std::vector<size_t>> by_domain;
  for (size_t i = 0; i < file.entries.size(); ++i) {
    const auto& e = file.entries[i];
    if (!e.is_confidential && e.domain) by_domain[*e.domain].push_back(i);
  }
  for (const auto& [domain, idx] : by_domain) {
    if (idx.size() < 2) continue;
    std::map<std::string, size_t> names;
    for (size_t i : idx) {
      if (file.entries[i].name) ++names[NormalizeName(*file.entries[i].name)];
    }
    if (names.size() < 2) continue;
    out.push_back(ParseFinding{
        Severity::kError, FindingCode::kMultiClaimDomain,
        fmt::format("domain '{}' claimed by {} entries under {} names", domain,
                    idx.size(), names.size()),
        SourceLocation::Entry(idx.front()), idx});
  }
  return out;
}

std::string SerializeSellersJson(const SellersFile& file) {
  json root = json::object();
  if (file.version) root["version"] = *file.version;
  if (file.contact_email) root["contact_email"] = *file.contact_email;
  if (file.contact_address) root["contact_address"] = *file.contact_address;
  json sellers = json::array();
  for (const auto& e : file.entries) {
    json j = {{"seller_id", e.seller_id},
              {"seller_type", SellerTypeName(e.seller_type)},
              {"is_confidential", e.is_confidential ? 1 : 0}};
    if (e.name) j["name"] = *e.name;
    if (e.domain) j["domain"] = *e.domain;
    sellers.push_back(std::move(j));
  }
  root["sellers"] = std::move(sellers);
  return root.dump(2, ' ', false, json::error_handler_t::replace);
}

}  // namespace adaudit
