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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adaudit/domain_lists.h"
#include "adaudit/entry_index.h"
#include "adaudit/stats.h"
#include "adaudit/whois.h"

namespace adaudit {

enum class ObjectionTag { kFakeNews, kPiracy, kIllegal };
std::string_view ObjectionTagName(ObjectionTag t);

// A DIRECT (network, id) key declared by two or more publishers.
struct Pool {
  std::string network;
  std::string account_id;
  std::set<std::string> members;
  std::set<ObjectionTag> tags;
  // Publishers declaring the same key as RESELLER; never pool members.
  std::set<std::string> reseller_declarers;

  size_t size() const { return members.size(); }
  AccountKey key() const { return {network, account_id}; }
  bool HasTag(ObjectionTag t) const { return tags.count(t) > 0; }
};

std::set<ObjectionTag> TagsFor(const std::string& domain,
                               const ObjectionableLists& lists);

// One pool per DIRECT key with >= 2 declarers, sorted by key. Members are
// tagged when `lists` is given.
std::vector<Pool> BuildPools(const EntryIndex& index,
                             const ObjectionableLists* lists = nullptr);

struct NetworkPoolShare {
  size_t pools_formed = 0;
  Ratio fraction_of_all_pools;
  // Share of the network's distinct DIRECT ids that form a pool.
  Ratio fraction_of_network_ids_pooled;
};

struct PoolStats {
  size_t pool_count = 0;
  std::vector<size_t> size_distribution;  // ascending
  Ratio mean;
  Ratio median;  // middle pair averaged for even counts
  std::map<std::string, NetworkPoolShare> per_network;
};

// Distinct DIRECT account ids per network.
std::map<std::string, size_t> DirectIdCounts(const EntryIndex& index);

// Empty input gives zeroed stats. Networks missing from
// `network_direct_ids` report a zero pooled fraction.
PoolStats ComputePoolStats(const std::vector<Pool>& pools,
                           const std::map<std::string, size_t>& network_direct_ids);

struct DarkPool {
  Pool pool;
  std::set<std::string> distinct_owners;   // normalized orgs, >= 2
  std::set<std::string> resolved_members;  // subset of pool.members
};

// A pool is dark iff its RESOLVED members name at least two distinct
// organizations. Other statuses are ignored.
std::vector<DarkPool> ClassifyDarkPools(
    const std::vector<Pool>& pools,
    const std::map<std::string, OwnerResolution>& owners);

struct PopularityStratum {
  long cutoff = 0;
  size_t pool_count = 0;
  Ratio avg_pool_size;  // 0 when no pool survives
  // Percent change against the previous cutoff; absent for the first cutoff
  // or when the previous one had no pools.
  std::optional<double> differential_increase;
};

// For cutoffs interval, 2*interval, ... up to the largest member rank: every
// pool is restricted to members ranked <= cutoff and dropped below size 2.
// Unranked members never survive. Throws StatsError when interval <= 0.
std::vector<PopularityStratum> PopularityStrata(const std::vector<Pool>& pools,
                                                const RankTable& ranks,
                                                long interval);

// Average rank of the ranked members of each pool (pools without ranked
// members are omitted).
std::map<AccountKey, double> PoolAverageRanks(const std::vector<Pool>& pools,
                                              const RankTable& ranks);

// Pearson correlation between a site's rank and the number of pools it is in,
// over ranked pool members.
StatResult RankPoolCorrelation(const std::vector<Pool>& pools,
                               const RankTable& ranks);

struct FlowGraph {
  // (network, website) -> number of that network's pools containing website.
  std::map<std::pair<std::string, std::string>, size_t> edges;
};

// Restricted to `focus_sites` unless it is empty.
FlowGraph RevenueFlowGraph(const std::vector<Pool>& pools,
                           const std::set<std::string>& focus_sites);

struct OverusedIdRow {
  std::string network;
  std::string account_id;
  std::optional<std::string> declared_owner;  // sellers.json name
  size_t website_count = 0;
};

// DIRECT keys with >= threshold declarers, most declared first. Throws
// StatsError when threshold < 2.
std::vector<OverusedIdRow> FlagOverusedDirectIds(const EntryIndex& index,
                                                 size_t threshold);

}  // namespace adaudit
