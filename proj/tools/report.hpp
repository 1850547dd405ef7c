// Copyright 2026 The rayclass Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAYCLASS_TOOLS_REPORT_HPP_
#define RAYCLASS_TOOLS_REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace rayclass::cli {

inline constexpr int kSchemaVersion = 1;

enum class ColumnType { kString, kInteger, kReal, kBoolean };

struct Column {
  std::string name;
  ColumnType type = ColumnType::kString;

  friend bool operator==(const Column&, const Column&) = default;
};

using Cell = std::variant<std::string, std::int64_t, double, bool>;
using Row = std::vector<Cell>;

inline constexpr std::string_view kStatusPass = "PASS";
inline constexpr std::string_view kStatusFail = "FAIL";
inline constexpr std::string_view kStatusIncomplete = "FAIL-INCOMPLETE";
inline constexpr std::string_view kStatusSkipped = "SKIPPED";

struct Summary {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skip = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

/// A table of results plus the metadata needed to reproduce it. The first
/// column is always "status".
struct Report {
  int schema_version = kSchemaVersion;
  std::string version;
  std::string timestamp;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<Column> columns;
  std::vector<Row> rows;
  Summary summary;

  /// Appends a row; throws std::invalid_argument on a width or type mismatch.
  void add_row(Row row);
  /// Recomputes summary from the status column.
  void tally();
};

/// Binary64 values with 17 significant digits.
std::string format_real(double value);

std::string to_csv(const Report& report);
std::string to_json(const Report& report);

/// Parses the output of to_json.
Report report_from_json(std::string_view text);
/// Parses the output of to_csv; the header must match columns.
std::vector<Row> rows_from_csv(std::string_view text, const std::vector<Column>& columns);

}  // namespace rayclass::cli

#endif  // RAYCLASS_TOOLS_REPORT_HPP_
