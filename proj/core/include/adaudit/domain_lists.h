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

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace adaudit {

struct DomainList {
  std::set<std::string> domains;  // lowercased
  std::vector<std::string> source_paths;
  size_t skipped_lines = 0;
  // SHA-256 prefix over the sorted domain set; equal lists compare equal.
  std::string Digest() const;
};

// One domain per line, '#' comments. Throws std::runtime_error when a file is
// unreadable; malformed lines are skipped and counted.
DomainList LoadDomainList(const std::filesystem::path& path);
DomainList LoadDomainLists(const std::vector<std::filesystem::path>& paths);

struct ObjectionableLists {
  std::set<std::string> misinformation;
  std::set<std::string> piracy;
  std::set<std::string> illegal;
  std::vector<std::string> source_paths;
  size_t skipped_lines = 0;
};

ObjectionableLists LoadObjectionableLists(
    const std::vector<std::filesystem::path>& misinformation,
    const std::vector<std::filesystem::path>& piracy,
    const std::vector<std::filesystem::path>& illegal);

struct RankTable {
  std::map<std::string, long> rank;
  size_t skipped_lines = 0;

  // 0 when unranked.
  long RankOf(const std::string& domain) const;
};

// Tranco CSV `rank,domain`. The first rank seen for a domain wins.
RankTable LoadRankTable(const std::filesystem::path& path);

using VerifiedNetworkList = DomainList;

}  // namespace adaudit
