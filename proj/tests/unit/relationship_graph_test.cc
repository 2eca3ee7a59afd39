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

#include "adaudit/relationship_graph.h"

#include <gtest/gtest.h>

#include "synth.h"

namespace adaudit {
namespace {

using testing::SellersText;
using testing::SnapshotBuilder;

TEST(RelationshipGraph, EdgesNodesAndCounters) {
  auto snap = SnapshotBuilder()
                  .Sellers("a.com", SellersText({{"1", "INTERMEDIARY", "b.com", "B", false},
                                                 {"2", "PUBLISHER", "p.com", "P", false},
                                                 {"3", "PUBLISHER", "", "", true},
                                                 {"4", "PUBLISHER", "q.com", "", true}}))
                  .Sellers("b.com", SellersText({{"9", "BOTH", "a.com", "A", false}}))
                  .Build();
  EntryIndex idx(snap);
  SellersView view(idx);
  auto g = BuildRelationshipGraph(view);
  EXPECT_EQ(g.snapshot_id, snap->snapshot_id);
  EXPECT_EQ(g.edges.size(), 4u);  // entries without a domain make no edge
  EXPECT_EQ(g.nodes, (std::set<std::string>{"a.com", "b.com", "p.com", "q.com"}));
  EXPECT_EQ(g.counters.at("a.com").entries, 4u);
  EXPECT_EQ(g.counters.at("a.com").confidential, 2u);
  EXPECT_EQ(g.counters.at("a.com").confidential_without_domain, 1u);
  ASSERT_EQ(g.EdgesTo("a.com").size(), 1u);
  EXPECT_EQ(g.EdgesTo("a.com")[0]->seller_type, SellerType::kBoth);
  EXPECT_EQ(g.EdgesFrom("a.com").size(), 3u);
}

TEST(SellersView, CopiedFilesAreExcludedFromServing) {
  std::string body = SellersText({{"1", "PUBLISHER", "p.com", "P", false}}, "x@google.com");
  auto snap = SnapshotBuilder()
                  .Sellers("c1.com", body)
                  .Sellers("c2.com", body)
                  .Sellers("real.com", SellersText({}))
                  .Sellers("broken.com", "not json")
                  .Build();
  EntryIndex idx(snap);
  SellersView view(idx);
  EXPECT_FALSE(view.Serves("c1.com"));
  EXPECT_TRUE(view.Serves("real.com"));
  EXPECT_FALSE(view.Serves("broken.com"));
  EXPECT_EQ(view.ServingDomains(), (std::vector<std::string>{"real.com"}));
  SellersView keep(idx, false);
  EXPECT_TRUE(keep.Serves("c1.com"));
}

}  // namespace
}  // namespace adaudit
