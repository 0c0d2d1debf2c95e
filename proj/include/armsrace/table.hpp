#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace armsrace {

// One table cell: a double (emitted with 17 significant digits so the exact
// bit pattern round-trips), a flag, or a short label.
using Cell = std::variant<double, bool, std::string>;

struct ResultTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Ordered key=value pairs emitted as leading `# key=value` comment lines.
  std::vector<std::pair<std::string, std::string>> metadata;

  void add_meta(const std::string& key, const std::string& value);
  void add_row(std::vector<Cell> row);
};

// Exact decimal rendering of a double (%.17g).
std::string format_double(double x);

std::string render_csv(const ResultTable& t);
void emit_csv(const ResultTable& t, const std::string& path);

struct ParsedCsv {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // raw cell text
};

ParsedCsv parse_csv(const std::string& text);

}  // namespace armsrace
