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

#include <algorithm>
#include <tuple>

namespace adaudit {

SellersView::SellersView(const EntryIndex& index, bool exclude_copies)
    : index_(&index), copy_groups_(DetectCopiedSellersFiles(index.snapshot())) {
  if (exclude_copies) excluded_ = ExcludedCopyDomains(copy_groups_);
}

bool SellersView::Serves(const std::string& domain) const {
  return File(domain) != nullptr;
}

const SellersFile* SellersView::File(const std::string& domain) const {
  if (excluded_.count(domain)) return nullptr;
  auto it = index_->by_network().find(domain);
  if (it == index_->by_network().end() || !IsStructurallyValid(it->second)) {
    return nullptr;
  }
  return &it->second;
}

std::vector<std::string> SellersView::ServingDomains() const {
  std::vector<std::string> out;
  for (const auto& [domain, file] : index_->by_network()) {
    if (Serves(domain)) out.push_back(domain);
  }
  return out;
}

std::vector<const RelationshipEdge*> RelationshipGraph::EdgesTo(
    const std::string& subject) const {
  std::vector<const RelationshipEdge*> out;
  auto lo = std::lower_bound(edges.begin(), edges.end(), subject,
                             [](const RelationshipEdge& e, const std::string& s) {
                               return e.subject < s;
                             });
  for (auto it = lo; it != edges.end() && it->subject == subject; ++it) {
    out.push_back(&*it);
  }
  return out;
}

std::vector<const RelationshipEdge*> RelationshipGraph::EdgesFrom(
    const std::string& issuer) const {
  std::vector<const RelationshipEdge*> out;
  for (const auto& e : edges) {
    if (e.issuer == issuer) out.push_back(&e);
  }
  return out;
}

RelationshipGraph BuildRelationshipGraph(const SellersView& view) {
  RelationshipGraph g;
  g.snapshot_id = view.snapshot_id();
  for (const auto& issuer : view.ServingDomains()) {
    const SellersFile* file = view.File(issuer);
    g.nodes.insert(issuer);
    auto& counters = g.counters[issuer];
    for (const auto& e : file->entries) {
      ++counters.entries;
      if (e.is_confidential) ++counters.confidential;
      if (!e.domain) {
        if (e.is_confidential) ++counters.confidential_without_domain;
        continue;
      }
      g.nodes.insert(*e.domain);
      g.edges.push_back(RelationshipEdge{issuer, *e.domain, e.seller_id,
                                         e.seller_type, e.is_confidential,
                                         g.snapshot_id});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.subject, a.issuer, a.seller_id) <
           std::tie(b.subject, b.issuer, b.seller_id);
  });
  return g;
}

}  // namespace adaudit
