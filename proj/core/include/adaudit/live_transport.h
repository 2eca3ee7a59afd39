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
#include <memory>
#include <mutex>
#include <string>

#include "adaudit/rate_limiter.h"
#include "adaudit/transport.h"

namespace adaudit {

struct LiveTransportOptions {
  // Upper bound on logical requests per domain in one run (ads.txt and
  // sellers.json make two).
  int max_requests_per_domain = 2;
  // Shared with the crawler and the query service live-fetch path.
  std::shared_ptr<PolitenessLimiter> politeness;
};

// HTTPS with plain-HTTP fallback on connection failure. Content-Type is not
// trusted; bodies are sniffed instead.
class LiveTransport : public Transport {
 public:
  explicit LiveTransport(LiveTransportOptions options = {});

  FetchOutcome Fetch(const FetchRequest& request) override;
  TransportMode mode() const override { return TransportMode::kLive; }

 private:
  bool Reserve(const std::string& domain);

  LiveTransportOptions options_;
  std::mutex mu_;
  std::map<std::string, int> used_;
};

}  // namespace adaudit
