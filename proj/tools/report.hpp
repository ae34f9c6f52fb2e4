#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace histoq::cli {

/// Shortest round-trip decimal representation capped at 12 significant
/// digits. "-0" normalizes to "0". Stable across runs and platforms, which
/// keeps reports byte-identical for identical configurations.
std::string format_number(double x);

/// The double that format_number(x) parses back to (<= 12 significant digits).
double round_for_report(double x);

struct Cell {
    enum class Kind { Text, Number, Boolean, Empty } kind;
    std::string text;
    double number = 0.0;
    bool flag = false;
};

Cell cell(std::string text);
Cell cell(const char* text);
Cell cell(double number);
Cell cell(bool flag);
Cell empty_cell();

/// One emitted table: fixed column order, fixed row order, no timestamps.
struct Report {
    std::string command;
    std::string version;
    std::vector<std::pair<std::string, Cell>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
};

}  // namespace histoq::cli
