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
#include <set>
#include <string>
#include <vector>

#include "adaudit/entry_index.h"
#include "adaudit/sellers_json.h"

namespace adaudit {

// The sellers.json files analysis may use: structurally valid, and not a
// byte copy excluded by the copied-file policy.
class SellersView {
 public:
  // `exclude_copies` = false disables the copied-file exclusion.
  explicit SellersView(const EntryIndex& index, bool exclude_copies = true);

  const EntryIndex& index() const { return *index_; }
  const std::string& snapshot_id() const { return index_->snapshot_id(); }
  const std::vector<CopiedFileGroup>& copy_groups() const { return copy_groups_; }
  const std::set<std::string>& excluded() const { return excluded_; }

  // Criterion "serves a sellers.json file".
  bool Serves(const std::string& domain) const;
  // nullptr unless Serves(domain).
  const SellersFile* File(const std::string& domain) const;
  std::vector<std::string> ServingDomains() const;

 private:
  const EntryIndex* index_;
  std::vector<CopiedFileGroup> copy_groups_;
  std::set<std::string> excluded_;
};

struct RelationshipEdge {
  std::string issuer;   // network whose sellers.json holds the entry
  std::string subject;  // the entry's domain
  std::string seller_id;
  SellerType seller_type = SellerType::kPublisher;
  bool confidential = false;
  std::string snapshot_id;

  friend bool operator==(const RelationshipEdge&, const RelationshipEdge&) = default;
};

struct NodeConfidentiality {
  size_t entries = 0;
  size_t confidential = 0;
  size_t confidential_without_domain = 0;
};

struct RelationshipGraph {
  std::string snapshot_id;
  std::set<std::string> nodes;
  // Sorted by (subject, issuer, seller_id).
  std::vector<RelationshipEdge> edges;
  std::map<std::string, NodeConfidentiality> counters;  // per issuer

  std::vector<const RelationshipEdge*> EdgesTo(const std::string& subject) const;
  std::vector<const RelationshipEdge*> EdgesFrom(const std::string& issuer) const;
};

// One edge per domain-bearing entry of every file in the view. Entries
// without a domain only update the issuer's counters.
RelationshipGraph BuildRelationshipGraph(const SellersView& view);

}  // namespace adaudit
