#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace symwork {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Column-ordered result table shared by the CSV and JSON writers.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// 12 significant digits, scientific notation: "4.99377586241e-05".
std::string format_number(double v);

void write_csv(std::ostream& out, const Table& table);

/// {"command": ..., "rows": [{column: value, ...}, ...]}. When `flat` is set and
/// the table has exactly one row, the row object itself is emitted instead.
void write_json(std::ostream& out, const Table& table, bool flat = false);

}  // namespace symwork
