#include "consec/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

namespace consec {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const ExactInteger& v) const { return v.str(); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ValidationError("format must be csv or json (got '" + std::string(name) + "')");
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_cell(row[c]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& key = table.columns[c];
      const auto& cell = row[c];
      if (const auto* v = std::get_if<std::int64_t>(&cell)) {
        object[key] = *v;
      } else if (const auto* d = std::get_if<double>(&cell)) {
        if (std::isnan(*d)) {
          object[key] = "nan";
        } else {
          object[key] = *d;
        }
      } else if (const auto* b = std::get_if<bool>(&cell)) {
        object[key] = *b;
      } else {
        object[key] = format_cell(cell);
      }
    }
    array.push_back(std::move(object));
  }
  out << array.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& table, Format format) {
  if (format == Format::Csv) {
    write_csv(out, table);
  } else {
    write_json(out, table);
  }
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.emplace_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
    pos = end + 1;
  }
  return rows;
}

}  // namespace consec
