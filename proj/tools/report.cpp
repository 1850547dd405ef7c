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

#include "report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rayclass::cli {
namespace {

std::string_view type_name(ColumnType type) {
  switch (type) {
    case ColumnType::kString:
      return "string";
    case ColumnType::kInteger:
      return "integer";
    case ColumnType::kReal:
      return "real";
    case ColumnType::kBoolean:
      return "boolean";
  }
  return "string";
}

ColumnType type_from_name(std::string_view name) {
  if (name == "integer") return ColumnType::kInteger;
  if (name == "real") return ColumnType::kReal;
  if (name == "boolean") return ColumnType::kBoolean;
  if (name == "string") return ColumnType::kString;
  throw std::invalid_argument("unknown column type: " + std::string(name));
}

bool matches(const Cell& cell, ColumnType type) {
  switch (type) {
    case ColumnType::kString:
      return std::holds_alternative<std::string>(cell);
    case ColumnType::kInteger:
      return std::holds_alternative<std::int64_t>(cell);
    case ColumnType::kReal:
      return std::holds_alternative<double>(cell);
    case ColumnType::kBoolean:
      return std::holds_alternative<bool>(cell);
  }
  return false;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return csv_escape(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else {
          return v ? "true" : "false";
        }
      },
      cell);
}

// Splits one CSV record starting at pos; advances pos past the line break.
std::vector<std::string> next_record(std::string_view text, std::size_t& pos) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          field += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

Cell parse_cell(const std::string& text, ColumnType type) {
  switch (type) {
    case ColumnType::kString:
      return text;
    case ColumnType::kInteger: {
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad integer field: " + text);
      }
      return v;
    }
    case ColumnType::kReal: {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) {
        throw std::invalid_argument("bad real field: " + text);
      }
      return v;
    }
    case ColumnType::kBoolean:
      if (text == "true") return true;
      if (text == "false") return false;
      throw std::invalid_argument("bad boolean field: " + text);
  }
  return text;
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

Cell json_cell(const nlohmann::ordered_json& j, ColumnType type) {
  switch (type) {
    case ColumnType::kString:
      return j.get<std::string>();
    case ColumnType::kInteger:
      return j.get<std::int64_t>();
    case ColumnType::kReal:
      return j.get<double>();
    case ColumnType::kBoolean:
      return j.get<bool>();
  }
  return std::string();
}

}  // namespace

void Report::add_row(Row row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("report row has " + std::to_string(row.size()) +
                                " cells, expected " + std::to_string(columns.size()));
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!matches(row[i], columns[i].type)) {
      throw std::invalid_argument("report cell type mismatch in column " + columns[i].name);
    }
  }
  rows.push_back(std::move(row));
}

void Report::tally() {
  summary = {};
  for (const auto& row : rows) {
    const auto& status = std::get<std::string>(row.at(0));
    if (status == kStatusPass) {
      ++summary.pass;
    } else if (status == kStatusSkipped) {
      ++summary.skip;
    } else {
      ++summary.fail;
    }
  }
}

std::string format_real(double value) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out << (i ? "," : "") << report.columns[i].name;
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << cell_text(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = report.schema_version;
  j["version"] = report.version;
  j["timestamp"] = report.timestamp;
  j["config"] = report.config;
  auto& cols = j["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : report.columns) {
    cols.push_back({{"name", c.name}, {"type", type_name(c.type)}});
  }
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      r[report.columns[i].name] = cell_json(row[i]);
    }
    rows.push_back(std::move(r));
  }
  j["summary"] = {{"pass", report.summary.pass},
                  {"fail", report.summary.fail},
                  {"skip", report.summary.skip}};
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  const auto j = nlohmann::ordered_json::parse(text);
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version " + std::to_string(r.schema_version));
  }
  r.version = j.at("version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.config = j.at("config");
  for (const auto& c : j.at("columns")) {
    r.columns.push_back({c.at("name").get<std::string>(),
                         type_from_name(c.at("type").get<std::string>())});
  }
  for (const auto& row : j.at("rows")) {
    Row out;
    for (const auto& c : r.columns) {
      out.push_back(json_cell(row.at(c.name), c.type));
    }
    r.add_row(std::move(out));
  }
  const auto& s = j.at("summary");
  r.summary = {s.at("pass").get<std::uint64_t>(), s.at("fail").get<std::uint64_t>(),
               s.at("skip").get<std::uint64_t>()};
  return r;
}

std::vector<Row> rows_from_csv(std::string_view text, const std::vector<Column>& columns) {
  std::size_t pos = 0;
  const auto header = next_record(text, pos);
  if (header.size() != columns.size()) {
    throw std::invalid_argument("CSV header width does not match the columns");
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != columns[i].name) {
      throw std::invalid_argument("CSV header mismatch at column " + columns[i].name);
    }
  }
  std::vector<Row> rows;
  while (pos < text.size()) {
    const auto fields = next_record(text, pos);
    if (fields.size() != columns.size()) {
      throw std::invalid_argument("CSV record width does not match the header");
    }
    Row row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      row.push_back(parse_cell(fields[i], columns[i].type));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rayclass::cli
