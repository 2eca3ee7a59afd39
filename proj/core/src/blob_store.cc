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

#include "adaudit/blob_store.h"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <unistd.h>

namespace adaudit {

namespace fs = std::filesystem;

BlobStore::BlobStore(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_);
}

fs::path BlobStore::PathFor(const ContentHash& hash) const {
  std::string hex = hash.Hex();
  return root_ / hex.substr(0, 2) / hex;
}

bool BlobStore::Contains(const ContentHash& hash) const {
  std::error_code ec;
  return fs::exists(PathFor(hash), ec);
}

ContentHash BlobStore::Put(std::string_view data) {
  ContentHash hash = ContentHash::Of(data);
  fs::path target = PathFor(hash);
  if (Contains(hash)) return hash;
  fs::create_directories(target.parent_path());
  static std::atomic<uint64_t> counter{0};
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("blob write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
  return hash;
}

std::optional<std::string> BlobStore::Get(const ContentHash& hash) const {
  std::ifstream in(PathFor(hash), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace adaudit
