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

#include "adaudit/ads_txt.h"

#include <set>
#include <tuple>

#include <fmt/format.h>

#include "adaudit/domain.h"

namespace adaudit {

namespace {

constexpr std::string_view kReplacementChar = "\xEF\xBF\xBD";

constexpr std::string_view kKnownVariables[] = {
    "contact", "subdomain", "inventorypartnerdomain", "ownerdomain",
    "managerdomain"};

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n' || text[i] == '\r') {
      lines.push_back(text.substr(start, i - start));
      if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      start = i + 1;
    }
  }
  if (start < text.size()) lines.push_back(text.substr(start));
  return lines;
}

std::vector<std::string_view> SplitFields(std::string_view s) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(TrimWhitespace(s.substr(start)));
      break;
    }
    out.push_back(TrimWhitespace(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

ParseFinding MakeFinding(Severity sev, FindingCode code, size_t line,
                         std::string message) {
  return ParseFinding{sev, code, std::move(message), SourceLocation::Line(line),
                      {}};
}

}  // namespace

std::string_view AccountTypeName(AccountType t) {
  return t == AccountType::kDirect ? "DIRECT" : "RESELLER";
}

std::optional<AccountType> ParseAccountType(std::string_view s) {
  if (EqualsIgnoreCase(s, "DIRECT")) return AccountType::kDirect;
  if (EqualsIgnoreCase(s, "RESELLER")) return AccountType::kReseller;
  return std::nullopt;
}

bool SanitizeUtf8(std::string_view in, std::string& out) {
  out.clear();
  out.reserve(in.size());
  bool replaced = false;
  size_t i = 0;
  while (i < in.size()) {
    auto c = static_cast<unsigned char>(in[i]);
    size_t len = 0;
    uint32_t cp = 0;
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    }
    bool ok = len != 0 && i + len <= in.size();
    for (size_t k = 1; ok && k < len; ++k) {
      auto cc = static_cast<unsigned char>(in[i + k]);
      if ((cc & 0xC0) != 0x80) {
        ok = false;
      } else {
        cp = (cp << 6) | (cc & 0x3F);
      }
    }
    // Reject overlong forms, surrogates and out-of-range code points.
    if (ok) {
      if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
          (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
          (cp >= 0xD800 && cp <= 0xDFFF)) {
        ok = false;
      }
    }
    if (ok) {
      out.append(in.substr(i, len));
      i += len;
    } else {
      out.append(kReplacementChar);
      replaced = true;
      ++i;
    }
  }
  return replaced;
}

AdsTxtFile ParseAdsTxt(std::string_view publisher_domain, std::string_view text) {
  AdsTxtFile file;
  file.publisher_domain = NormalizeDomain(publisher_domain);

  std::string decoded;
  if (SanitizeUtf8(text, decoded)) {
    file.parse_findings.push_back(ParseFinding{
        Severity::kWarn, FindingCode::kInvalidUtf8,
        "invalid UTF-8 sequences replaced", SourceLocation::File(), {}});
  }
  std::string_view body = decoded;
  if (body.substr(0, 3) == "\xEF\xBB\xBF") body.remove_prefix(3);

  std::set<std::tuple<std::string, std::string, AccountType>> seen;
  auto lines = SplitLines(body);
  for (size_t idx = 0; idx < lines.size(); ++idx) {
    const size_t line_no = idx + 1;
    std::string_view line = lines[idx];
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = TrimWhitespace(line);
    if (line.empty()) continue;

    if (line.find(',') == std::string_view::npos) {
      size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        file.parse_findings.push_back(
            MakeFinding(Severity::kError, FindingCode::kMalformedLine, line_no,
                        "line is neither a record nor a variable"));
        continue;
      }
      std::string key = AsciiLower(TrimWhitespace(line.substr(0, eq)));
      std::string value(TrimWhitespace(line.substr(eq + 1)));
      if (key.empty() || ContainsWhitespace(key)) {
        file.parse_findings.push_back(
            MakeFinding(Severity::kError, FindingCode::kMalformedLine, line_no,
                        "variable with empty or malformed key"));
        continue;
      }
      bool known = false;
      for (auto k : kKnownVariables) known = known || k == key;
      if (!known) {
        file.parse_findings.push_back(
            MakeFinding(Severity::kWarn, FindingCode::kUnknownVariable, line_no,
                        fmt::format("unknown variable '{}'", key)));
      }
      file.variables.push_back({std::move(key), std::move(value), line_no});
      continue;
    }

    // Extension data follows the first ';'.
    if (size_t semi = line.find(';'); semi != std::string_view::npos) {
      line = TrimWhitespace(line.substr(0, semi));
    }
    auto fields = SplitFields(line);
    if (fields.size() < 3) {
      file.parse_findings.push_back(
          MakeFinding(Severity::kError, FindingCode::kMalformedLine, line_no,
                      fmt::format("expected at least 3 fields, found {}",
                                  fields.size())));
      continue;
    }
    if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      file.parse_findings.push_back(
          MakeFinding(Severity::kError, FindingCode::kEmptyField, line_no,
                      "required field is empty"));
      continue;
    }
    std::string system = NormalizeDomain(fields[0]);
    if (ContainsWhitespace(system)) {
      file.parse_findings.push_back(MakeFinding(
          Severity::kError, FindingCode::kInvalidAdSystemDomain, line_no,
          fmt::format("ad system domain '{}' contains whitespace", system)));
      continue;
    }
    auto type = ParseAccountType(fields[2]);
    if (!type) {
      file.parse_findings.push_back(MakeFinding(
          Severity::kError, FindingCode::kInvalidAccountType, line_no,
          fmt::format("account type '{}' is not DIRECT or RESELLER",
                      fields[2])));
      continue;
    }
    if (!IsValidDomain(system)) {
      file.parse_findings.push_back(MakeFinding(
          Severity::kWarn, FindingCode::kAdSystemNotDomain, line_no,
          fmt::format("ad system '{}' is not a domain name", system)));
    }
    if (fields.size() > 4) {
      file.parse_findings.push_back(MakeFinding(
          Severity::kWarn, FindingCode::kExtraFields, line_no,
          fmt::format("{} fields, only 4 are defined", fields.size())));
    }
    AdsTxtRecord rec;
    rec.ad_system_domain = std::move(system);
    rec.account_id = std::string(fields[1]);
    rec.account_type = *type;
    if (fields.size() >= 4 && !fields[3].empty()) {
      rec.cert_authority_id = std::string(fields[3]);
    }
    rec.source_line = line_no;

    auto key = std::make_tuple(rec.ad_system_domain, rec.account_id,
                               rec.account_type);
    if (!seen.insert(key).second) {
      file.parse_findings.push_back(MakeFinding(
          Severity::kWarn, FindingCode::kDuplicateRecord, line_no,
          fmt::format("duplicate record {}, {}, {}", rec.ad_system_domain,
                      rec.account_id, AccountTypeName(rec.account_type))));
      continue;
    }
    file.records.push_back(std::move(rec));
  }
  return file;
}

std::string SerializeAdsTxt(const AdsTxtFile& file) {
  std::string out;
  for (const auto& r : file.records) {
    out += r.ad_system_domain;
    out += ", ";
    out += r.account_id;
    out += ", ";
    out += AccountTypeName(r.account_type);
    if (r.cert_authority_id) {
      out += ", ";
      out += *r.cert_authority_id;
    }
    out += '\n';
  }
  for (const auto& v : file.variables) {
    out += v.key;
    out += '=';
    out += v.value;
    out += '\n';
  }
  return out;
}

}  // namespace adaudit
