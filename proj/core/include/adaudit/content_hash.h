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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace adaudit {

// SHA-256 digest of raw bytes.
struct ContentHash {
  std::array<uint8_t, 32> bytes{};

  static ContentHash Of(std::string_view data);
  // Accepts 64 lowercase or uppercase hex digits; throws std::invalid_argument
  // otherwise.
  static ContentHash FromHex(std::string_view hex);

  std::string Hex() const;

  friend bool operator==(const ContentHash&, const ContentHash&) = default;
  friend auto operator<=>(const ContentHash&, const ContentHash&) = default;
};

// Incremental SHA-256 for hashing canonical multi-part content.
class Sha256Builder {
 public:
  Sha256Builder();
  ~Sha256Builder();
  Sha256Builder(const Sha256Builder&) = delete;
  Sha256Builder& operator=(const Sha256Builder&) = delete;

  // Appends a length-prefixed field so adjacent fields cannot alias.
  Sha256Builder& Field(std::string_view data);
  ContentHash Finish();

 private:
  void* ctx_;
};

}  // namespace adaudit
