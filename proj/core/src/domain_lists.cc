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

#include "adaudit/domain_lists.h"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "adaudit/content_hash.h"
#include "adaudit/csv.h"
#include "adaudit/domain.h"

namespace adaudit {

std::string DomainList::Digest() const {
  Sha256Builder h;
  for (const auto& d : domains) h.Field(d);
  return h.Finish().Hex().substr(0, 16);
}

DomainList LoadDomainList(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read domain list " + path.string());
  DomainList out;
  out.source_paths.push_back(path.string());
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = line;
    if (size_t hash = l.find('#'); hash != std::string_view::npos) {
      l = l.substr(0, hash);
    }
    l = TrimWhitespace(l);
    if (l.empty()) continue;
    auto d = ParseDomain(l);
    if (!d) {
      ++out.skipped_lines;
      continue;
    }
    out.domains.insert(*d);
  }
  return out;
}

DomainList LoadDomainLists(const std::vector<std::filesystem::path>& paths) {
  DomainList out;
  for (const auto& p : paths) {
    DomainList one = LoadDomainList(p);
    out.domains.insert(one.domains.begin(), one.domains.end());
    out.source_paths.insert(out.source_paths.end(), one.source_paths.begin(),
                            one.source_paths.end());
    out.skipped_lines += one.skipped_lines;
  }
  return out;
}

ObjectionableLists LoadObjectionableLists(
    const std::vector<std::filesystem::path>& misinformation,
    const std::vector<std::filesystem::path>& piracy,
    const std::vector<std::filesystem::path>& illegal) {
  ObjectionableLists out;
  auto load = [&](const std::vector<std::filesystem::path>& paths,
                  std::set<std::string>& into) {
    DomainList l = LoadDomainLists(paths);
    into = std::move(l.domains);
    out.source_paths.insert(out.source_paths.end(), l.source_paths.begin(),
                            l.source_paths.end());
    out.skipped_lines += l.skipped_lines;
  };
  load(misinformation, out.misinformation);
  load(piracy, out.piracy);
  load(illegal, out.illegal);
  return out;
}

long RankTable::RankOf(const std::string& domain) const {
  auto it = rank.find(domain);
  return it == rank.end() ? 0 : it->second;
}

RankTable LoadRankTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read rank table " + path.string());
  RankTable out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = TrimWhitespace(line);
    if (l.empty() || l.front() == '#') continue;
    auto fields = SplitCsvLine(l);
    if (fields.size() < 2) {
      ++out.skipped_lines;
      continue;
    }
    std::string_view r = TrimWhitespace(fields[0]);
    long rank = 0;
    auto [ptr, ec] = std::from_chars(r.data(), r.data() + r.size(), rank);
    auto d = ParseDomain(fields[1]);
    if (ec != std::errc() || ptr != r.data() + r.size() || rank <= 0 || !d) {
      ++out.skipped_lines;
      continue;
    }
    out.rank.try_emplace(*d, rank);
  }
  return out;
}

}  // namespace adaudit
