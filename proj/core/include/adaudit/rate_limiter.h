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

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <string>

namespace adaudit {

using SteadyClockFn = std::function<std::chrono::steady_clock::time_point()>;

// Enforces a minimum spacing between requests to the same host. Wait()
// blocks the caller until its slot; slots are reserved under the lock so
// concurrent callers for one host are serialized.
class PolitenessLimiter {
 public:
  explicit PolitenessLimiter(std::chrono::milliseconds per_host_delay)
      : delay_(per_host_delay) {}

  void Wait(const std::string& host);
  std::chrono::milliseconds delay() const { return delay_; }

 private:
  std::chrono::milliseconds delay_;
  std::mutex mu_;
  std::map<std::string, std::chrono::steady_clock::time_point> next_slot_;
};

// Classic token bucket per key: `burst` tokens, refilled at `per_second`.
class TokenBucketLimiter {
 public:
  TokenBucketLimiter(double burst, double per_second,
                     SteadyClockFn clock = nullptr);

  // Consumes one token for `key` if available.
  bool Allow(const std::string& key);

  double burst() const { return burst_; }
  double per_second() const { return rate_; }

 private:
  struct Bucket {
    double tokens;
    std::chrono::steady_clock::time_point last;
  };
  double burst_;
  double rate_;
  SteadyClockFn clock_;
  std::mutex mu_;
  std::map<std::string, Bucket> buckets_;
};

}  // namespace adaudit
