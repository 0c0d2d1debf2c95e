#include "armsrace/table.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "armsrace/errors.hpp"

namespace armsrace {

void ResultTable::add_meta(const std::string& key, const std::string& value) {
  metadata.emplace_back(key, value);
}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw ComputationError("table '" + name + "': row width " +
                           std::to_string(row.size()) + " != column count " +
                           std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

void check_text(const std::string& s, const std::string& table) {
  if (s.find(',') != std::string::npos || s.find('\n') != std::string::npos) {
    throw ComputationError("table '" + table +
                           "': text cell contains a separator: " + s);
  }
}

std::string cell_text(const Cell& c, const std::string& table) {
  if (std::holds_alternative<double>(c)) {
    return format_double(std::get<double>(c));
  }
  if (std::holds_alternative<bool>(c)) {
    return std::get<bool>(c) ? "true" : "false";
  }
  const std::string& s = std::get<std::string>(c);
  check_text(s, table);
  return s;
}

}  // namespace

std::string render_csv(const ResultTable& t) {
  std::ostringstream out;
  for (const auto& [key, value] : t.metadata) {
    out << "# " << key << "=" << value << "\n";
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    check_text(t.columns[i], t.name);
    out << (i ? "," : "") << t.columns[i];
  }
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << cell_text(row[i], t.name);
    }
    out << "\n";
  }
  return out.str();
}

void emit_csv(const ResultTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << render_csv(t);
  if (!out) throw IoError("write failed: " + path);
}

ParsedCsv parse_csv(const std::string& text) {
  ParsedCsv parsed;
  std::istringstream in(text);
  std::string line;
  bool header_done = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body[0] == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq != std::string::npos) {
        parsed.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      }
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    if (!header_done) {
      parsed.columns = std::move(cells);
      header_done = true;
    } else {
      parsed.rows.push_back(std::move(cells));
    }
  }
  return parsed;
}

}  // namespace armsrace
