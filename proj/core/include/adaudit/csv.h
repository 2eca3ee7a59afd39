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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace adaudit {

// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are
// quoted with embedded quotes doubled.
std::string CsvEscape(std::string_view field);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void Row(const std::vector<std::string>& fields);
  size_t rows_written() const { return rows_; }

 private:
  std::ostream& out_;
  size_t rows_ = 0;
};

// Splits one CSV line (no embedded newlines) honoring quotes.
std::vector<std::string> SplitCsvLine(std::string_view line);

}  // namespace adaudit
