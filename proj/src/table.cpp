#include "regime_lab/table.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace regime_lab {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row width does not match the column set");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

namespace {

std::string cell_text(const Cell& cell) {
    if (const double* d = std::get_if<double>(&cell)) return format_number(*d);
    return std::get<std::string>(cell);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

Cell parse_cell(const std::string& text) {
    if (text.empty()) return text;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() + text.size()) return v;
    return text;
}

}  // namespace

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
        os << '\n';
    }
}

void write_json(const Table& table, std::ostream& os, bool single_object) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (const double* d = std::get_if<double>(&row[i])) {
                // Round through the 9-digit text form so CSV and JSON agree.
                obj[table.columns[i]] = std::strtod(format_number(*d).c_str(), nullptr);
            } else {
                obj[table.columns[i]] = std::get<std::string>(row[i]);
            }
        }
        rows.push_back(std::move(obj));
    }
    if (single_object && rows.size() == 1) {
        os << rows.front().dump(2) << '\n';
    } else {
        os << rows.dump(2) << '\n';
    }
}

Table parse_csv(std::istream& is) {
    Table table;
    std::string line;
    if (!std::getline(is, line)) return table;
    table.columns = split_line(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<Cell> row;
        for (const std::string& field : split_line(line)) row.push_back(parse_cell(field));
        table.add_row(std::move(row));
    }
    return table;
}

}  // namespace regime_lab
