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

#include "adaudit/reports.h"

#include <algorithm>

#include "adaudit/analysis_context.h"
#include "adaudit/csv.h"

namespace adaudit {

namespace {

template <typename Range>
std::string Join(const Range& items, char sep = ';') {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string Bool(bool b) { return b ? "true" : "false"; }

ReportTable Pools(const AnalysisContext& ctx) {
  ReportTable t{{"network", "account_id", "size", "members", "tags",
                 "reseller_declarers"},
                {}};
  for (const auto& p : ctx.pools()) {
    std::vector<std::string> tags;
    for (auto tag : p.tags) tags.emplace_back(ObjectionTagName(tag));
    t.rows.push_back({p.network, p.account_id, std::to_string(p.size()),
                      Join(p.members), Join(tags), Join(p.reseller_declarers)});
  }
  return t;
}

ReportTable DarkPools(const AnalysisContext& ctx) {
  ReportTable t{{"network", "account_id", "size", "distinct_owner_count",
                 "owners", "resolved_members"},
                {}};
  for (const auto& d : ctx.dark_pools()) {
    t.rows.push_back({d.pool.network, d.pool.account_id,
                      std::to_string(d.pool.size()),
                      std::to_string(d.distinct_owners.size()),
                      Join(d.distinct_owners), Join(d.resolved_members)});
  }
  return t;
}

ReportTable Mismatches(const AnalysisContext& ctx) {
  ReportTable t{{"network", "account_id", "ads_type", "seller_type",
                 "declaring_publisher_count", "declaring_publishers"},
                {}};
  for (const auto& m : ctx.mismatches().mismatches) {
    t.rows.push_back({m.network, m.account_id, std::string(AccountTypeName(m.ads_type)),
                      std::string(SellerTypeName(m.seller_type)),
                      std::to_string(m.declaring_publishers.size()),
                      Join(m.declaring_publishers)});
  }
  return t;
}

ReportTable Hidden(const AnalysisContext& ctx) {
  ReportTable t{{"subject", "verified", "weak", "named_client_count", "role",
                 "issuer", "seller_id"},
                {}};
  for (const auto& f : ctx.hidden_intermediaries()) {
    auto emit = [&](const char* role, const std::set<Listing>& listings) {
      for (const auto& [issuer, id] : listings) {
        t.rows.push_back({f.subject, Bool(f.verified), Bool(f.weak),
                          std::to_string(f.named_client_count), role, issuer, id});
      }
    };
    emit("publisher", f.publisher_listings);
    emit("intermediary", f.intermediary_listings);
  }
  return t;
}

ReportTable Confidentiality(const AnalysisContext& ctx) {
  ReportTable t{{"network", "total", "confidential", "fraction", "fraction_decimal"},
                {}};
  for (const auto& [network, row] : ctx.confidentiality()) {
    char dec[32];
    std::snprintf(dec, sizeof(dec), "%.4f", row.fraction.ToDouble());
    t.rows.push_back({network, std::to_string(row.total),
                      std::to_string(row.confidential), row.fraction.ToString(),
                      dec});
  }
  return t;
}

ReportTable Overused(const AnalysisContext& ctx) {
  ReportTable t{{"network", "account_id", "declared_owner", "website_count"}, {}};
  for (const auto& r : ctx.overused_ids()) {
    t.rows.push_back({r.network, r.account_id, r.declared_owner.value_or(""),
                      std::to_string(r.website_count)});
  }
  return t;
}

ReportTable Flows(const AnalysisContext& ctx) {
  ReportTable t{{"network", "website", "pool_count"}, {}};
  for (const auto& [edge, n] : ctx.flows().edges) {
    t.rows.push_back({edge.first, edge.second, std::to_string(n)});
  }
  return t;
}

}  // namespace

std::string_view ReportKindName(ReportKind k) {
  switch (k) {
    case ReportKind::kPools: return "pools";
    case ReportKind::kDarkPools: return "dark-pools";
    case ReportKind::kMismatches: return "mismatches";
    case ReportKind::kHiddenIntermediaries: return "hidden-intermediaries";
    case ReportKind::kConfidentiality: return "confidentiality";
    case ReportKind::kOverusedIds: return "overused-ids";
    case ReportKind::kFlows: return "flows";
  }
  return "";
}

std::optional<ReportKind> ParseReportKind(std::string_view s) {
  for (auto k : AllReportKinds()) {
    if (ReportKindName(k) == s) return k;
  }
  return std::nullopt;
}

const std::vector<ReportKind>& AllReportKinds() {
  static const std::vector<ReportKind> kAll = {
      ReportKind::kPools,           ReportKind::kDarkPools,
      ReportKind::kMismatches,      ReportKind::kHiddenIntermediaries,
      ReportKind::kConfidentiality, ReportKind::kOverusedIds,
      ReportKind::kFlows,
  };
  return kAll;
}

ReportTable BuildReport(ReportKind kind, const AnalysisContext& ctx) {
  switch (kind) {
    case ReportKind::kPools: return Pools(ctx);
    case ReportKind::kDarkPools: return DarkPools(ctx);
    case ReportKind::kMismatches: return Mismatches(ctx);
    case ReportKind::kHiddenIntermediaries: return Hidden(ctx);
    case ReportKind::kConfidentiality: return Confidentiality(ctx);
    case ReportKind::kOverusedIds: return Overused(ctx);
    case ReportKind::kFlows: return Flows(ctx);
  }
  return {};
}

size_t WriteCsv(const ReportTable& table, std::ostream& out) {
  CsvWriter w(out);
  w.Row(table.header);
  for (const auto& row : table.rows) w.Row(row);
  return table.rows.size();
}

void WriteTextTable(const ReportTable& table, std::ostream& out) {
  std::vector<size_t> width(table.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], std::min<size_t>(row[i].size(), 60));
    }
  };
  measure(table.header);
  for (const auto& r : table.rows) measure(r);
  auto print = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      std::string cell = row[i].size() > 60 ? row[i].substr(0, 57) + "..." : row[i];
      out << cell;
      if (i + 1 < row.size()) out << std::string(width[i] - cell.size() + 2, ' ');
    }
    out << '\n';
  };
  print(table.header);
  for (const auto& r : table.rows) print(r);
}

}  // namespace adaudit
