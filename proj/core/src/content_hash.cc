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

#include "adaudit/content_hash.h"

#include <openssl/evp.h>

#include <stdexcept>

namespace adaudit {

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

ContentHash ContentHash::Of(std::string_view data) {
  ContentHash h;
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), h.bytes.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != h.bytes.size()) {
    throw std::runtime_error("sha256 digest failed");
  }
  return h;
}

ContentHash ContentHash::FromHex(std::string_view hex) {
  if (hex.size() != 64) throw std::invalid_argument("bad content hash length");
  ContentHash h;
  for (size_t i = 0; i < 32; ++i) {
    int hi = HexValue(hex[2 * i]);
    int lo = HexValue(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("bad content hash digit");
    h.bytes[i] = static_cast<uint8_t>(hi * 16 + lo);
  }
  return h;
}

std::string ContentHash::Hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Sha256Builder::Sha256Builder() : ctx_(EVP_MD_CTX_new()) {
  if (!ctx_ ||
      EVP_DigestInit_ex(static_cast<EVP_MD_CTX*>(ctx_), EVP_sha256(),
                        nullptr) != 1) {
    throw std::runtime_error("sha256 init failed");
  }
}

Sha256Builder::~Sha256Builder() {
  EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_));
}

Sha256Builder& Sha256Builder::Field(std::string_view data) {
  auto* ctx = static_cast<EVP_MD_CTX*>(ctx_);
  uint64_t n = data.size();
  unsigned char prefix[8];
  for (int i = 0; i < 8; ++i) prefix[i] = static_cast<unsigned char>(n >> (8 * i));
  EVP_DigestUpdate(ctx, prefix, sizeof(prefix));
  EVP_DigestUpdate(ctx, data.data(), data.size());
  return *this;
}

ContentHash Sha256Builder::Finish() {
  ContentHash h;
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), h.bytes.data(),
                         &len) != 1) {
    throw std::runtime_error("sha256 finalize failed");
  }
  return h;
}

}  // namespace adaudit
