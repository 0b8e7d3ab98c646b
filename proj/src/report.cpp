#include "hardy/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hardy {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::scientific, 14);
  if (res.ec != std::errc{}) {
    throw std::runtime_error("format_number: to_chars failed");
  }
  return std::string(buf, res.ptr);
}

std::string format_integer(long long v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_unsigned(std::uint64_t v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size()) {
    throw std::logic_error("Table: row width does not match header");
  }
  rows.push_back(std::move(cells));
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(table.columns[i].name);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(row[i]);
    }
    out << '\n';
  }
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string json_number_array(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  out += ']';
  return out;
}

namespace {

// JSON has no nan/inf literals; the schema uses null for them.
std::string json_cell(const std::string& text, CellKind kind) {
  switch (kind) {
    case CellKind::text:
      return json_string(text);
    case CellKind::boolean:
    case CellKind::integer:
      return text;
    case CellKind::number:
      if (text.find("nan") != std::string::npos ||
          text.find("inf") != std::string::npos) {
        return "null";
      }
      return text;
  }
  return text;
}

void write_object(std::ostream& out, const JsonFields& fields) {
  out << '{';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << json_string(fields[i].first) << ':' << fields[i].second;
  }
  out << '}';
}

}  // namespace

void write_json(std::ostream& out, const JsonFields& config, const Table& table,
                const JsonFields& summary) {
  out << "{\"config\":";
  write_object(out, config);
  out << ",\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r) out << ',';
    out << '{';
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out << ',';
      out << json_string(table.columns[c].name) << ':'
          << json_cell(table.rows[r][c], table.columns[c].kind);
    }
    out << '}';
  }
  out << "],\"summary\":";
  write_object(out, summary);
  out << "}\n";
}

}  // namespace hardy
