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
#include <optional>
#include <string>

#include "adaudit/transport.h"

namespace adaudit {

// Serves recorded files from a directory tree and never touches the network.
//
// Layout: <root>/<host>/<path> holds the body served for
// scheme://<host>/<path>. An optional <root>/<host>/meta overrides behaviour,
// one directive per line:
//
//   ads.txt status=timeout
//   sellers.json redirect=https://other.example/sellers.json
//
// Valid statuses are the FetchStatus names (ok, not_found, timeout,
// network_error, non_text, redirected). A missing host directory simulates an
// unreachable host (NETWORK_ERROR); a missing file inside an existing host
// directory is NOT_FOUND.
class FixtureTransport : public Transport {
 public:
  explicit FixtureTransport(std::filesystem::path root);

  FetchOutcome Fetch(const FetchRequest& request) override;
  TransportMode mode() const override { return TransportMode::kFixture; }

  const std::filesystem::path& root() const { return root_; }

 private:
  struct Directive {
    std::optional<FetchStatus> status;
    std::optional<std::string> redirect;
  };
  std::optional<Directive> LookupMeta(const std::string& host,
                                      const std::string& file) const;

  std::filesystem::path root_;
};

}  // namespace adaudit
