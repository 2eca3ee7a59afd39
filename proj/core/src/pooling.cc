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

#include "adaudit/pooling.h"

#include <algorithm>

namespace adaudit {

std::string_view ObjectionTagName(ObjectionTag t) {
  switch (t) {
    case ObjectionTag::kFakeNews:
      return "FAKE_NEWS";
    case ObjectionTag::kPiracy:
      return "PIRACY";
    case ObjectionTag::kIllegal:
      return "ILLEGAL";
  }
  return "FAKE_NEWS";
}

std::set<ObjectionTag> TagsFor(const std::string& domain,
                               const ObjectionableLists& lists) {
  std::set<ObjectionTag> tags;
  if (lists.misinformation.count(domain)) tags.insert(ObjectionTag::kFakeNews);
  if (lists.piracy.count(domain)) tags.insert(ObjectionTag::kPiracy);
  if (lists.illegal.count(domain)) tags.insert(ObjectionTag::kIllegal);
  return tags;
}

std::vector<Pool> BuildPools(const EntryIndex& index,
                             const ObjectionableLists* lists) {
  std::vector<Pool> pools;
  for (const auto& [key, declarers] : index.by_account()) {
    Pool pool;
    pool.network = key.first;
    pool.account_id = key.second;
    for (const auto& [publisher, type] : declarers) {
      if (type == AccountType::kDirect) {
        pool.members.insert(publisher);
      } else {
        pool.reseller_declarers.insert(publisher);
      }
    }
    if (pool.members.size() < 2) continue;
    if (lists) {
      for (const auto& m : pool.members) {
        auto t = TagsFor(m, *lists);
        pool.tags.insert(t.begin(), t.end());
      }
    }
    pools.push_back(std::move(pool));
  }
  return pools;
}

std::map<std::string, size_t> DirectIdCounts(const EntryIndex& index) {
  std::map<std::string, size_t> out;
  for (const auto& [key, declarers] : index.by_account()) {
    bool direct = std::any_of(declarers.begin(), declarers.end(), [](const auto& d) {
      return d.second == AccountType::kDirect;
    });
    if (direct) ++out[key.first];
  }
  return out;
}

PoolStats ComputePoolStats(const std::vector<Pool>& pools,
                           const std::map<std::string, size_t>& network_direct_ids) {
  PoolStats s;
  s.pool_count = pools.size();
  if (pools.empty()) return s;
  s.size_distribution.reserve(pools.size());
  int64_t total = 0;
  for (const auto& p : pools) {
    s.size_distribution.push_back(p.size());
    total += static_cast<int64_t>(p.size());
    ++s.per_network[p.network].pools_formed;
  }
  std::sort(s.size_distribution.begin(), s.size_distribution.end());
  const auto n = static_cast<int64_t>(pools.size());
  s.mean = Ratio::Of(total, n);
  const auto& d = s.size_distribution;
  if (d.size() % 2 == 1) {
    s.median = Ratio::Of(static_cast<int64_t>(d[d.size() / 2]), 1);
  } else {
    s.median = Ratio::Of(
        static_cast<int64_t>(d[d.size() / 2 - 1] + d[d.size() / 2]), 2);
  }
  for (auto& [network, share] : s.per_network) {
    const auto formed = static_cast<int64_t>(share.pools_formed);
    share.fraction_of_all_pools = Ratio::Of(formed, n);
    auto it = network_direct_ids.find(network);
    if (it != network_direct_ids.end() && it->second > 0) {
      share.fraction_of_network_ids_pooled =
          Ratio::Of(formed, static_cast<int64_t>(it->second));
    }
  }
  return s;
}

std::vector<DarkPool> ClassifyDarkPools(
    const std::vector<Pool>& pools,
    const std::map<std::string, OwnerResolution>& owners) {
  std::vector<DarkPool> out;
  for (const auto& p : pools) {
    DarkPool dp;
    for (const auto& m : p.members) {
      auto it = owners.find(m);
      if (it == owners.end() || it->second.status != OwnerStatus::kResolved) {
        continue;
      }
      dp.resolved_members.insert(m);
      dp.distinct_owners.insert(*it->second.normalized_org);
    }
    if (dp.distinct_owners.size() < 2) continue;
    dp.pool = p;
    out.push_back(std::move(dp));
  }
  return out;
}

std::vector<PopularityStratum> PopularityStrata(const std::vector<Pool>& pools,
                                                const RankTable& ranks,
                                                long interval) {
  if (interval <= 0) throw StatsError("popularity interval must be positive");
  // Member ranks per pool, sorted, so each cutoff is a prefix count.
  std::vector<std::vector<long>> member_ranks;
  long max_rank = 0;
  for (const auto& p : pools) {
    std::vector<long> r;
    for (const auto& m : p.members) {
      long rank = ranks.RankOf(m);
      if (rank > 0) r.push_back(rank);
    }
    std::sort(r.begin(), r.end());
    if (!r.empty()) max_rank = std::max(max_rank, r.back());
    member_ranks.push_back(std::move(r));
  }
  std::vector<PopularityStratum> out;
  if (max_rank == 0) return out;
  const long steps = (max_rank + interval - 1) / interval;
  for (long k = 1; k <= steps; ++k) {
    PopularityStratum s;
    s.cutoff = k * interval;
    int64_t total = 0;
    for (const auto& r : member_ranks) {
      auto kept = std::upper_bound(r.begin(), r.end(), s.cutoff) - r.begin();
      if (kept >= 2) {
        ++s.pool_count;
        total += kept;
      }
    }
    s.avg_pool_size = s.pool_count ? Ratio::Of(total, static_cast<int64_t>(s.pool_count))
                                   : Ratio{};
    if (!out.empty() && out.back().pool_count > 0) {
      double prev = out.back().avg_pool_size.ToDouble();
      s.differential_increase = (s.avg_pool_size.ToDouble() - prev) / prev * 100.0;
    }
    out.push_back(s);
  }
  return out;
}

std::map<AccountKey, double> PoolAverageRanks(const std::vector<Pool>& pools,
                                              const RankTable& ranks) {
  std::map<AccountKey, double> out;
  for (const auto& p : pools) {
    double sum = 0;
    size_t n = 0;
    for (const auto& m : p.members) {
      if (long r = ranks.RankOf(m); r > 0) {
        sum += static_cast<double>(r);
        ++n;
      }
    }
    if (n) out[p.key()] = sum / static_cast<double>(n);
  }
  return out;
}

StatResult RankPoolCorrelation(const std::vector<Pool>& pools,
                               const RankTable& ranks) {
  std::map<std::string, size_t> participation;
  for (const auto& p : pools) {
    for (const auto& m : p.members) ++participation[m];
  }
  std::vector<double> xs, ys;
  for (const auto& [site, count] : participation) {
    if (long r = ranks.RankOf(site); r > 0) {
      xs.push_back(static_cast<double>(r));
      ys.push_back(static_cast<double>(count));
    }
  }
  return Pearson(xs, ys);
}

FlowGraph RevenueFlowGraph(const std::vector<Pool>& pools,
                           const std::set<std::string>& focus_sites) {
  FlowGraph g;
  for (const auto& p : pools) {
    for (const auto& m : p.members) {
      if (!focus_sites.empty() && !focus_sites.count(m)) continue;
      ++g.edges[{p.network, m}];
    }
  }
  return g;
}

std::vector<OverusedIdRow> FlagOverusedDirectIds(const EntryIndex& index,
                                                 size_t threshold) {
  if (threshold < 2) throw StatsError("overused-id threshold must be >= 2");
  std::vector<OverusedIdRow> rows;
  for (const auto& [key, declarers] : index.by_account()) {
    size_t direct = 0;
    for (const auto& d : declarers) direct += d.second == AccountType::kDirect;
    if (direct < threshold) continue;
    OverusedIdRow row;
    row.network = key.first;
    row.account_id = key.second;
    row.website_count = direct;
    auto s = index.by_seller().find(key);
    if (s != index.by_seller().end() && s->second.name) {
      row.declared_owner = s->second.name;
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.website_count > b.website_count;
  });
  return rows;
}

}  // namespace adaudit
