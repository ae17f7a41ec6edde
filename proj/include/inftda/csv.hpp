// Copyright 2026 The InfTDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFTDA_CSV_HPP_
#define INFTDA_CSV_HPP_

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "inftda/data.hpp"
#include "inftda/error.hpp"

namespace inftda {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

inline void check_writable_field(const std::string& field) {
  if (field.find(',') != std::string::npos ||
      field.find('\n') != std::string::npos ||
      field.find('\r') != std::string::npos) {
    throw InvalidArgument("field '" + field +
                          "' contains a comma or newline; quoting is not "
                          "supported");
  }
}

}  // namespace detail

// Reads a header-first CSV (UTF-8, comma separated, no quoting) and encodes
// it against a schema built from the data: per column, the categories are the
// distinct observed values in lexicographic order. `column_order`, when
// given, must be a permutation of the header names; attributes are permuted
// before encoding so the hierarchy follows the requested order.
inline Dataset ingest_csv(
    std::istream& in,
    const std::optional<std::vector<std::string>>& column_order =
        std::nullopt) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty input: missing header row");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  std::vector<std::string> header = detail::split_csv_line(line);
  const std::size_t d = header.size();
  {
    std::set<std::string> names(header.begin(), header.end());
    if (names.size() != d) {
      throw ParseError("duplicate column name in header");
    }
  }

  // Map output attribute position -> source column.
  std::vector<std::size_t> source_column(d);
  if (column_order.has_value()) {
    if (column_order->size() != d) {
      throw InvalidArgument("column order must list all " +
                            std::to_string(d) + " columns");
    }
    std::set<std::size_t> used;
    for (std::size_t i = 0; i < d; ++i) {
      const auto it =
          std::find(header.begin(), header.end(), (*column_order)[i]);
      if (it == header.end()) {
        throw InvalidArgument("column '" + (*column_order)[i] +
                              "' not found in header");
      }
      const std::size_t pos = static_cast<std::size_t>(it - header.begin());
      if (!used.insert(pos).second) {
        throw InvalidArgument("column '" + (*column_order)[i] +
                              "' listed twice");
      }
      source_column[i] = pos;
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) {
      source_column[i] = i;
    }
  }

  std::vector<std::vector<std::string>> rows;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) {
      break;  // tolerate one trailing newline
    }
    std::vector<std::string> fields = detail::split_csv_line(line);
    if (fields.size() != d) {
      throw ParseError("line " + std::to_string(line_number) + ": expected " +
                       std::to_string(d) + " fields, got " +
                       std::to_string(fields.size()));
    }
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) {
    throw ParseError("no data rows");
  }

  std::vector<Attribute> attributes(d);
  std::vector<std::map<std::string, std::uint32_t>> encoders(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::set<std::string> distinct;
    for (const auto& row : rows) {
      distinct.insert(row[source_column[i]]);
    }
    attributes[i].name = header[source_column[i]];
    attributes[i].categories.assign(distinct.begin(), distinct.end());
    if (attributes[i].categories.size() < 2) {
      throw ParseError("column '" + attributes[i].name +
                       "' has a single distinct value; every attribute needs "
                       "at least 2 categories");
    }
    std::uint32_t code = 0;
    for (const std::string& category : attributes[i].categories) {
      encoders[i][category] = code++;
    }
  }

  std::vector<Index> records;
  records.reserve(rows.size());
  for (const auto& row : rows) {
    Index record(d);
    for (std::size_t i = 0; i < d; ++i) {
      record[i] = encoders[i].at(row[source_column[i]]);
    }
    records.push_back(std::move(record));
  }
  return Dataset(Schema(std::move(attributes)), std::move(records));
}

inline Dataset ingest_csv_file(
    const std::string& path,
    const std::optional<std::vector<std::string>>& column_order =
        std::nullopt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open input file '" + path + "'");
  }
  return ingest_csv(in, column_order);
}

namespace detail {

inline void write_csv_header(std::ostream& out, const Schema& schema,
                             bool with_count) {
  for (std::size_t i = 0; i < schema.dimension(); ++i) {
    detail::check_writable_field(schema.attribute(i).name);
    if (i > 0) {
      out << ',';
    }
    out << schema.attribute(i).name;
  }
  if (with_count) {
    out << ",count";
  }
  out << '\n';
}

inline void write_csv_tuple(std::ostream& out, const Schema& schema,
                            const Index& index) {
  for (std::size_t i = 0; i < index.size(); ++i) {
    const std::string& label = schema.attribute(i).categories.at(index[i]);
    detail::check_writable_field(label);
    if (i > 0) {
      out << ',';
    }
    out << label;
  }
}

}  // namespace detail

// One row per record, tuples repeated count times, lexicographic order.
inline void write_records_csv(std::ostream& out, const ContingencyTable& table) {
  detail::write_csv_header(out, table.schema(), /*with_count=*/false);
  for (const auto& [index, count] : table.counts()) {
    for (long long i = 0; i < count; ++i) {
      detail::write_csv_tuple(out, table.schema(), index);
      out << '\n';
    }
  }
}

// One row per nonzero cell plus a trailing `count` column.
inline void write_table_csv(std::ostream& out, const ContingencyTable& table) {
  detail::write_csv_header(out, table.schema(), /*with_count=*/true);
  for (const auto& [index, count] : table.counts()) {
    detail::write_csv_tuple(out, table.schema(), index);
    out << ',' << count << '\n';
  }
}

}  // namespace inftda

#endif  // INFTDA_CSV_HPP_
