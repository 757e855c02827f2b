#ifndef KEMENY_DATASET_HPP
#define KEMENY_DATASET_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "kemeny/errors.hpp"

namespace kemeny {

// Column-major numeric table with named columns.
struct Dataset {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const noexcept { return columns.empty() ? 0 : columns[0].size(); }

  std::size_t column_index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    throw ConfigError("no such column: " + name);
  }

  const std::vector<double>& column(const std::string& name) const {
    return columns[column_index(name)];
  }
};

namespace detail {

struct RawRow {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line where the row starts
};

// RFC-4180 record reader: comma-separated fields, optional quoting with ""
// escapes, quoted fields may span lines, CRLF and LF both accepted.
inline std::vector<RawRow> read_csv_rows(std::istream& in) {
  std::vector<RawRow> rows;
  std::string field;
  RawRow current;
  current.line = 1;
  std::size_t line = 1;
  bool in_quotes = false;
  bool row_has_content = false;
  char c;

  const auto push_field = [&]() {
    current.fields.push_back(field);
    field.clear();
  };
  const auto push_row = [&]() {
    push_field();
    rows.push_back(std::move(current));
    current = RawRow{};
    current.line = line;
    row_has_content = false;
  };

  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_has_content = true;
        break;
      case ',':
        push_field();
        row_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        if (row_has_content || !field.empty() || !current.fields.empty()) {
          push_row();
        } else {
          current.line = line;
        }
        break;
      default:
        field.push_back(c);
        row_has_content = true;
        break;
    }
  }
  if (in_quotes) {
    throw FormatError(current.line, "unterminated quoted field");
  }
  if (row_has_content || !field.empty() || !current.fields.empty()) {
    push_row();
  }
  return rows;
}

inline double parse_cell(const std::string& text, std::size_t row, std::size_t col) {
  if (text.empty()) throw ParseError(row, col, "empty cell");
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;  // from_chars rejects an explicit plus
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(row, col, "not a number: \"" + text + "\"");
  }
  if (std::isnan(value)) throw ParseError(row, col, "NaN is not accepted");
  return value;
}

inline void write_csv_field(std::ostream& out, const std::string& text) {
  const bool needs_quotes = text.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) {
    out << text;
    return;
  }
  out << '"';
  for (char c : text) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

inline std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace detail

// Loads a header-first CSV of numbers. "inf" / "-inf" (any case) map to the
// infinities; NaN and empty cells are rejected; every row must match the
// header width.
inline Dataset load_csv(std::istream& in) {
  const std::vector<detail::RawRow> rows = detail::read_csv_rows(in);
  if (rows.empty()) throw FormatError(1, "missing header row");

  Dataset data;
  data.names = rows[0].fields;
  for (std::size_t i = 0; i < data.names.size(); ++i) {
    if (data.names[i].empty()) throw FormatError(rows[0].line, "empty column name");
    for (std::size_t j = i + 1; j < data.names.size(); ++j) {
      if (data.names[i] == data.names[j]) {
        throw FormatError(rows[0].line, "duplicate column name: " + data.names[i]);
      }
    }
  }
  data.columns.assign(data.names.size(), {});

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const detail::RawRow& row = rows[r];
    if (row.fields.size() != data.names.size()) {
      throw FormatError(row.line, "expected " + std::to_string(data.names.size()) +
                                      " fields, got " + std::to_string(row.fields.size()));
    }
    for (std::size_t c = 0; c < row.fields.size(); ++c) {
      data.columns[c].push_back(detail::parse_cell(row.fields[c], row.line, c + 1));
    }
  }
  return data;
}

inline Dataset load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  return load_csv(in);
}

// Writes values in shortest round-trip form, so load_csv(write_csv(d)) gives
// back bit-identical doubles.
inline void write_csv(const Dataset& data, std::ostream& out) {
  for (std::size_t i = 0; i < data.names.size(); ++i) {
    if (i > 0) out << ',';
    detail::write_csv_field(out, data.names[i]);
  }
  out << '\n';
  const std::size_t n = data.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
      if (c > 0) out << ',';
      const double v = data.columns[c][r];
      if (std::isnan(v)) throw InvalidValueError("refusing to write NaN");
      out << detail::format_double(v);
    }
    out << '\n';
  }
}

}  // namespace kemeny

#endif  // KEMENY_DATASET_HPP
