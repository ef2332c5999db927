#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vwapgamma::cli {

enum class OutputFormat { table, csv, json };

struct Number {
  double value;
  int decimals;  // used by table and csv; json prints the full value
};

using Cell = std::variant<std::string, std::int64_t, Number>;

/// A rectangular result set plus free-form metadata.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Single-row reports print as "name value" lines in table format.
void render(std::ostream& out, const Report& report, OutputFormat format);

}  // namespace vwapgamma::cli
