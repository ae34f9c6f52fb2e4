#include "report.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace histoq::cli {

namespace {

int significant_digits(const std::string& s) {
    int digits = 0;
    bool leading = true;
    for (char ch : s) {
        if (ch == 'e' || ch == 'E') break;
        if (ch < '0' || ch > '9') continue;
        if (ch == '0' && leading) continue;
        leading = false;
        ++digits;
    }
    return digits;
}

std::string to_chars_shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) return "0";
    std::string s = to_chars_shortest(x);
    if (significant_digits(s) > 12) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
        s.assign(buf, res.ptr);
        // re-shorten: the rounded value may have a shorter exact form
        const double rounded = std::strtod(s.c_str(), nullptr);
        std::string again = to_chars_shortest(rounded);
        if (again.size() < s.size()) s = std::move(again);
    }
    return s;
}

double round_for_report(double x) {
    return std::strtod(format_number(x).c_str(), nullptr);
}

Cell cell(std::string text) { return Cell{Cell::Kind::Text, std::move(text)}; }
Cell cell(const char* text) { return Cell{Cell::Kind::Text, text}; }
Cell cell(double number) {
    Cell c{Cell::Kind::Number};
    c.number = number;
    return c;
}
Cell cell(bool flag) {
    Cell c{Cell::Kind::Boolean};
    c.flag = flag;
    return c;
}
Cell empty_cell() { return Cell{Cell::Kind::Empty}; }

void Report::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::logic_error("Report: row width does not match the header");
    rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::Number: return format_number(c.number);
        case Cell::Kind::Boolean: return c.flag ? "true" : "false";
        case Cell::Kind::Empty: return "";
        case Cell::Kind::Text: break;
    }
    const std::string& s = c.text;
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

nlohmann::ordered_json json_value(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::Number: return round_for_report(c.number);
        case Cell::Kind::Boolean: return c.flag;
        case Cell::Kind::Empty: return nullptr;
        case Cell::Kind::Text: break;
    }
    return c.text;
}

}  // namespace

void Report::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << csv_field(cell(columns[i]));
        out << (i + 1 < columns.size() ? "," : "\n");
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << csv_field(row[i]);
            out << (i + 1 < row.size() ? "," : "\n");
        }
    }
}

void Report::write_json(std::ostream& out) const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["version"] = version;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : parameters) params[key] = json_value(value);
    doc["parameters"] = std::move(params);
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json row_json = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) row_json[columns[i]] = json_value(row[i]);
        rows_json.push_back(std::move(row_json));
    }
    doc["rows"] = std::move(rows_json);
    out << doc.dump(2) << "\n";
}

}  // namespace histoq::cli
