#pragma once

// Tabular output shared by the CLI commands: table, csv or json.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <deque>
#include <variant>
#include <vector>

namespace steklov {

enum class OutputFormat { Table, Csv, Json };

/// Throws Error(ParseError) for anything but table, csv, json.
OutputFormat parse_output_format(const std::string& text);

using Cell = std::variant<std::monostate, long long, double, std::string, bool>;

struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  Section& add_row(std::vector<Cell> row) {
    rows.push_back(std::move(row));
    return *this;
  }
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;  // echoed in the header
  std::deque<Section> sections;  // deque: add_section references stay valid
  std::vector<std::string> notes;

  Section& add_section(std::string name, std::vector<std::string> columns) {
    sections.push_back({std::move(name), std::move(columns), {}});
    return sections.back();
  }
};

/// %.12g for csv/json, %.6g for the human table.
std::string format_number(double value, int significant_digits);

void write_report(const Report& report, OutputFormat format, std::ostream& out);

}  // namespace steklov
