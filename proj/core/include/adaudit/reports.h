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

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace adaudit {

class AnalysisContext;

enum class ReportKind {
  kPools,
  kDarkPools,
  kMismatches,
  kHiddenIntermediaries,
  kConfidentiality,
  kOverusedIds,
  kFlows,
};

std::string_view ReportKindName(ReportKind k);  // "dark-pools", ...
std::optional<ReportKind> ParseReportKind(std::string_view s);
const std::vector<ReportKind>& AllReportKinds();

struct ReportTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Row granularity: one per pool, dark pool, mismatch, (finding, listing)
// pair, serving network, overused key and flow edge respectively.
ReportTable BuildReport(ReportKind kind, const AnalysisContext& ctx);

// Header plus rows; returns the number of data rows.
size_t WriteCsv(const ReportTable& table, std::ostream& out);

// Column-aligned plain text for terminals.
void WriteTextTable(const ReportTable& table, std::ostream& out);

}  // namespace adaudit
