#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace vwapgamma::cli {
namespace {

std::string text(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  const Number& n = std::get<Number>(cell);
  if (std::isnan(n.value)) return "nan";
  if (std::isinf(n.value)) return n.value > 0 ? "inf" : "-inf";
  return fmt::format("{:.{}f}", n.value, n.decimals);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

nlohmann::ordered_json json_value(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  const double v = std::get<Number>(cell).value;
  if (!std::isfinite(v)) return nullptr;
  return v;
}

void render_table(std::ostream& out, const Report& report) {
  for (const auto& [key, value] : report.meta) out << "# " << key << ": " << value << '\n';
  if (report.rows.size() == 1) {
    std::size_t width = 0;
    for (const auto& c : report.columns) width = std::max(width, c.size());
    for (std::size_t j = 0; j < report.columns.size(); ++j) {
      out << fmt::format("{:<{}}  {}\n", report.columns[j], width, text(report.rows[0][j]));
    }
    return;
  }
  std::vector<std::size_t> width(report.columns.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t j = 0; j < width.size(); ++j) width[j] = report.columns[j].size();
  for (const auto& row : report.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) {
      line.push_back(text(row[j]));
      width[j] = std::max(width[j], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t j = 0; j < line.size(); ++j) {
      out << (j ? "  " : "") << fmt::format("{:>{}}", line[j], width[j]);
    }
    out << '\n';
  };
  emit(report.columns);
  for (const auto& line : cells) emit(line);
}

}  // namespace

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("report row width mismatch");
  rows.push_back(std::move(row));
}

void render(std::ostream& out, const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      render_table(out, report);
      break;
    case OutputFormat::csv: {
      for (std::size_t j = 0; j < report.columns.size(); ++j) {
        out << (j ? "," : "") << csv_escape(report.columns[j]);
      }
      out << '\n';
      for (const auto& row : report.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_escape(text(row[j]));
        out << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::ordered_json doc;
      doc["command"] = report.command;
      doc["meta"] = nlohmann::ordered_json::object();
      for (const auto& [key, value] : report.meta) doc["meta"][key] = value;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : report.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t j = 0; j < row.size(); ++j) obj[report.columns[j]] = json_value(row[j]);
        doc["rows"].push_back(std::move(obj));
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace vwapgamma::cli
