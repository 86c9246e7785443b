#include "steklov/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "steklov/error.hpp"

namespace steklov {

namespace {

std::string cell_text(const Cell& cell, int digits) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "-";
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, double>) return format_number(v, digits);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      cell);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return std::stod(format_number(v, 12));
        } else return v;
      },
      cell);
}

void write_table(const Report& report, std::ostream& out) {
  out << "# " << report.command;
  for (const auto& [k, v] : report.config) out << ' ' << k << '=' << v;
  out << '\n';
  for (const auto& section : report.sections) {
    out << '\n' << "[" << section.name << "]\n";
    std::vector<std::size_t> width(section.columns.size());
    std::vector<std::vector<std::string>> text;
    for (std::size_t c = 0; c < section.columns.size(); ++c) width[c] = section.columns[c].size();
    for (const auto& row : section.rows) {
      auto& line = text.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(cell_text(row[c], 6));
        width[c] = std::max(width[c], line.back().size());
      }
    }
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out << "  ";
        out << cells[c];
        if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size(), ' ');
      }
      out << '\n';
    };
    emit(section.columns);
    for (const auto& line : text) emit(line);
  }
  for (const auto& note : report.notes) out << "\nnote: " << note << '\n';
}

void write_csv(const Report& report, std::ostream& out) {
  out << "# " << report.command;
  for (const auto& [k, v] : report.config) out << ' ' << k << '=' << v;
  out << '\n';
  for (const auto& note : report.notes) out << "# note: " << note << '\n';
  for (const auto& section : report.sections) {
    out << "# section: " << section.name << '\n';
    for (std::size_t c = 0; c < section.columns.size(); ++c) out << (c ? "," : "") << csv_escape(section.columns[c]);
    out << '\n';
    for (const auto& row : section.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(cell_text(row[c], 12));
      out << '\n';
    }
  }
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = report.command;
  auto& config = doc["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.config) config[k] = v;
  auto& sections = doc["sections"] = nlohmann::ordered_json::object();
  for (const auto& section : report.sections) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : section.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < row.size(); ++c) obj[section.columns[c]] = cell_json(row[c]);
      rows.push_back(std::move(obj));
    }
    sections[section.name] = std::move(rows);
  }
  doc["notes"] = report.notes;
  out << doc.dump(2) << '\n';
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw Error(ErrorCode::ParseError, "unknown format '" + text + "'");
}

std::string format_number(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant_digits, value);
  std::string s(buffer);
  if (s == "-0") s = "0";
  return s;
}

void write_report(const Report& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Table: write_table(report, out); break;
    case OutputFormat::Csv: write_csv(report, out); break;
    case OutputFormat::Json: write_json(report, out); break;
  }
}

}  // namespace steklov
