#include "pcafactor/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcafactor/errors.hpp"

namespace pcafactor {

namespace {

// Minimal RFC-4180-style reader: commas separate fields, CRLF or LF ends a
// record, double quotes wrap fields and are escaped by doubling.
std::vector<std::vector<std::string>> read_records(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty() && !field_was_quoted) {
      in_quotes = true;
      field_was_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_record();
    } else {
      field += c;
    }
  }
  if (in_quotes) throw DataError("unterminated quoted field at end of file");
  if (!field.empty() && field.back() == '\r') field.pop_back();
  if (!field.empty() || !record.empty() || field_was_quoted) end_record();
  return records;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_number(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::string cell_location(std::size_t file_row, std::size_t col,
                          const std::vector<std::string>& names) {
  return "row " + std::to_string(file_row) + ", column " +
         std::to_string(col + 1) + " ('" + names[col] + "')";
}

}  // namespace

Dataset parse_csv(const std::string& text, bool has_header,
                  const std::string& origin) {
  const auto records = read_records(text);
  if (records.empty()) throw DataError(origin + ": file has no rows");

  const std::size_t m = records[0].size();
  if (m < 2) {
    throw DataError(origin + ": need at least 2 columns, got " +
                    std::to_string(m));
  }

  std::vector<std::string> names;
  if (has_header) {
    std::set<std::string_view> seen;
    for (std::size_t j = 0; j < m; ++j) {
      const std::string name(trimmed(records[0][j]));
      if (name.empty()) {
        throw DataError(origin + ": header column " + std::to_string(j + 1) +
                        " has an empty name");
      }
      names.push_back(name);
    }
    for (const auto& name : names) {
      if (!seen.insert(name).second) {
        throw DataError(origin + ": duplicate column name '" + name + "'");
      }
    }
  } else {
    for (std::size_t j = 0; j < m; ++j) {
      names.push_back("c" + std::to_string(j + 1));
    }
  }

  const std::size_t first_data = has_header ? 1 : 0;
  const std::size_t n = records.size() - first_data;
  if (n < 2) {
    throw DataError(origin + ": need at least 2 data rows, got " +
                    std::to_string(n));
  }

  std::vector<double> values(n * m);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& record = records[first_data + r];
    const std::size_t file_row = first_data + r + 1;
    if (record.size() != m) {
      throw DataError(origin + ": row " + std::to_string(file_row) + " has " +
                      std::to_string(record.size()) + " cells, expected " +
                      std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const std::string_view cell = trimmed(record[j]);
      if (cell.empty()) {
        throw DataError(origin + ": empty cell at " +
                        cell_location(file_row, j, names) +
                        "; missing values are not supported");
      }
      double v = 0.0;
      if (!parse_number(cell, v)) {
        throw DataError(origin + ": non-numeric cell '" + std::string(cell) +
                        "' at " + cell_location(file_row, j, names));
      }
      if (!std::isfinite(v)) {
        throw DataError(origin + ": non-finite value at " +
                        cell_location(file_row, j, names));
      }
      values[r * m + j] = v;
    }
  }

  return Dataset{std::move(names), DataMatrix(Matrix(n, m, std::move(values))),
                 origin};
}

Dataset ingest_csv(const std::string& path, bool has_header) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_csv(buffer.str(), has_header, path);
}

}  // namespace pcafactor
