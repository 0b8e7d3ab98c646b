#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hardy {

/// Scientific notation with 15 significant digits via std::to_chars:
/// locale-independent and bit-deterministic for a given double.
std::string format_number(double v);
std::string format_integer(long long v);
std::string format_unsigned(std::uint64_t v);

/// RFC-4180: quote when the cell contains comma, quote, or newline.
std::string csv_escape(const std::string& cell);

enum class CellKind { number, integer, text, boolean };

struct Column {
  std::string name;
  CellKind kind = CellKind::number;
};

/// One flat, already-formatted table; the unit of CLI output.
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
};

void write_csv(std::ostream& out, const Table& table);

/// Key/value pairs with pre-formatted JSON value payloads.
using JsonFields = std::vector<std::pair<std::string, std::string>>;

std::string json_string(const std::string& s);
std::string json_number_array(const std::vector<double>& values);

/// {"config": {...}, "rows": [...], "summary": {...}}
void write_json(std::ostream& out, const JsonFields& config, const Table& table,
                const JsonFields& summary);

}  // namespace hardy
