#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "consec/exact.hpp"

namespace consec {

/// One table cell. Exact integers are always written in full decimal;
/// doubles use the shortest representation that round-trips.
using Cell = std::variant<std::int64_t, ExactInteger, double, std::string, bool>;

std::string format_cell(const Cell& cell);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

Format parse_format(std::string_view name);

/// Header row, comma separator, LF line endings.
void write_csv(std::ostream& out, const Table& table);

/// Array of objects with keys in column order. Exact integers are emitted as
/// decimal strings so no consumer can lose precision; NaN becomes "nan".
void write_json(std::ostream& out, const Table& table);

void write_table(std::ostream& out, const Table& table, Format format);

/// Splits CSV emitted by write_csv back into header + string rows.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace consec
