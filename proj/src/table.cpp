#include "symwork/table.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <ostream>
#include <stdexcept>

namespace symwork {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row has " + std::to_string(row.size()) + " cells, table has " +
                           std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

// Doubles pass through the same 12-digit text as the CSV so both formats
// parse back to identical values.
nlohmann::ordered_json json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::stod(format_number(*d));
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

nlohmann::ordered_json row_object(const Table& t, const std::vector<Cell>& row) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
  return obj;
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table, bool flat) {
  nlohmann::ordered_json doc;
  if (flat && table.rows.size() == 1) {
    doc = row_object(table, table.rows.front());
  } else {
    doc["command"] = table.command;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) doc["rows"].push_back(row_object(table, row));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace symwork
