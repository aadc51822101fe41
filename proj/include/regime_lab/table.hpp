#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace regime_lab {

using Cell = std::variant<double, std::string>;

/// Flat record set with a fixed column list. Numbers are serialized with
/// nine significant digits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

std::string format_number(double value);

/// Header row first, comma separated, LF line endings.
void write_csv(const Table& table, std::ostream& os);

/// JSON array of row objects, or a bare object when `single_object` is set
/// and the table has exactly one row.
void write_json(const Table& table, std::ostream& os, bool single_object = false);

/// Inverse of write_csv: cells that parse completely as numbers become doubles.
Table parse_csv(std::istream& is);

}  // namespace regime_lab
