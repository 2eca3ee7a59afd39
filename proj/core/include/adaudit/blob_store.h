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
#include <optional>
#include <string>
#include <string_view>

#include "adaudit/content_hash.h"

namespace adaudit {

// Content-addressed files under <root>/<hh>/<64-hex>. Writes go through a
// temporary file and rename, so a blob is either absent or complete.
class BlobStore {
 public:
  explicit BlobStore(std::filesystem::path root);

  ContentHash Put(std::string_view data);
  std::optional<std::string> Get(const ContentHash& hash) const;
  bool Contains(const ContentHash& hash) const;

  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path PathFor(const ContentHash& hash) const;
  std::filesystem::path root_;
};

}  // namespace adaudit
