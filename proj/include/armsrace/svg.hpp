#pragma once

#include "armsrace/table.hpp"

namespace armsrace {

enum class ChartKind {
  Line,        // linear axes; column 0 is x, remaining numeric columns series
  LineLogX,    // log10 x axis
  LineLogLog,  // log10 both axes
  Phase,       // last two columns are (x, y); the first column names the
               // series, and a polyline breaks when it changes between
               // consecutive rows (middle columns only order the points)
};

std::string render_svg(const ResultTable& t, ChartKind kind);
void emit_svg(const ResultTable& t, ChartKind kind, const std::string& path);

}  // namespace armsrace
