#include "armsrace/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "armsrace/errors.hpp"

namespace armsrace {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 520.0;
constexpr double kMarginL = 70.0;
constexpr double kMarginR = 20.0;
constexpr double kMarginT = 30.0;
constexpr double kMarginB = 50.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

double as_number(const Cell& c) {
  if (std::holds_alternative<double>(c)) return std::get<double>(c);
  if (std::holds_alternative<bool>(c)) return std::get<bool>(c) ? 1.0 : 0.0;
  return std::numeric_limits<double>::quiet_NaN();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

struct AxisScale {
  bool log = false;
  double lo = 0.0, hi = 1.0;

  double to_unit(double v) const {
    const double x = log ? std::log10(v) : v;
    const double a = log ? std::log10(lo) : lo;
    const double b = log ? std::log10(hi) : hi;
    if (b == a) return 0.5;
    return (x - a) / (b - a);
  }
};

// Round ticks: decades for log axes, ~6 linear steps otherwise.
std::vector<double> ticks_for(const AxisScale& sc) {
  std::vector<double> t;
  if (sc.log) {
    const int lo = static_cast<int>(std::floor(std::log10(sc.lo) - 1e-9));
    const int hi = static_cast<int>(std::ceil(std::log10(sc.hi) + 1e-9));
    for (int e = lo; e <= hi; ++e) {
      const double v = std::pow(10.0, e);
      if (v >= sc.lo * 0.999 && v <= sc.hi * 1.001) t.push_back(v);
    }
    if (t.empty()) t = {sc.lo, sc.hi};
    return t;
  }
  const double span = sc.hi - sc.lo;
  if (span <= 0.0) return {sc.lo};
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * m >= raw) {
      step = mag * m;
      break;
    }
  }
  const double first = std::ceil(sc.lo / step) * step;
  for (double v = first; v <= sc.hi + 1e-9 * span; v += step) t.push_back(v);
  return t;
}

std::string render_chart(const std::vector<Series>& series, bool log_x,
                         bool log_y, const std::string& title,
                         const std::string& x_label) {
  AxisScale xs, ys;
  xs.log = log_x;
  ys.log = log_y;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      if (log_x && !(x > 0.0)) continue;  // log axes ignore non-positive data
      if (log_y && !(y > 0.0)) continue;
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!(x_lo <= x_hi)) {
    x_lo = 0.0;
    x_hi = 1.0;
  }
  if (!(y_lo <= y_hi)) {
    y_lo = 0.0;
    y_hi = 1.0;
  }
  if (!log_y) {
    const double pad = 0.05 * (y_hi - y_lo + 1e-30);
    y_lo -= pad;
    y_hi += pad;
  }
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;
  xs.lo = x_lo;
  xs.hi = x_hi;
  ys.lo = y_lo;
  ys.hi = y_hi;

  const double plot_w = kWidth - kMarginL - kMarginR;
  const double plot_h = kHeight - kMarginT - kMarginB;
  const auto px = [&](double v) { return kMarginL + xs.to_unit(v) * plot_w; };
  const auto py = [&](double v) {
    return kMarginT + (1.0 - ys.to_unit(v)) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"18\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << title
      << "</text>\n";

  // Axes and ticks.
  svg << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT + plot_h
      << "\" x2=\"" << kMarginL + plot_w << "\" y2=\"" << kMarginT + plot_h
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT << "\" x2=\""
      << kMarginL << "\" y2=\"" << kMarginT + plot_h
      << "\" stroke=\"black\"/>\n";
  for (double t : ticks_for(xs)) {
    const double x = px(t);
    svg << "<line x1=\"" << x << "\" y1=\"" << kMarginT + plot_h << "\" x2=\""
        << x << "\" y2=\"" << kMarginT + plot_h + 5 << "\" stroke=\"black\"/>"
        << "<text x=\"" << x << "\" y=\"" << kMarginT + plot_h + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt(t) << "</text>\n";
  }
  for (double t : ticks_for(ys)) {
    const double y = py(t);
    svg << "<line x1=\"" << kMarginL - 5 << "\" y1=\"" << y << "\" x2=\""
        << kMarginL << "\" y2=\"" << y << "\" stroke=\"black\"/>"
        << "<text x=\"" << kMarginL - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt(t) << "</text>\n";
  }
  svg << "<text x=\"" << kMarginL + plot_w / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">"
      << x_label << "</text>\n";

  // Polylines.
  int color = 0;
  for (const Series& s : series) {
    svg << "<polyline fill=\"none\" stroke=\""
        << kPalette[color % 8] << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (log_x && !(x > 0.0)) continue;
      if (log_y && !(y > 0.0)) continue;
      svg << px(x) << "," << py(y) << " ";
    }
    svg << "\"/>\n";
    ++color;
  }

  // Legend.
  double ly = kMarginT + 12.0;
  color = 0;
  for (const Series& s : series) {
    const double lx = kMarginL + plot_w - 150.0;
    svg << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\""
        << lx + 24 << "\" y2=\"" << ly - 4 << "\" stroke=\""
        << kPalette[color % 8] << "\" stroke-width=\"2\"/>"
        << "<text x=\"" << lx + 30 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label
        << "</text>\n";
    ly += 16.0;
    ++color;
    if (color >= 16) break;  // keep the legend inside the frame
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<Series> line_series(const ResultTable& t) {
  if (t.columns.size() < 2) {
    throw ComputationError("svg: table '" + t.name + "' needs >= 2 columns");
  }
  std::vector<Series> series(t.columns.size() - 1);
  for (std::size_t j = 1; j < t.columns.size(); ++j) {
    series[j - 1].label = t.columns[j];
  }
  for (const auto& row : t.rows) {
    const double x = as_number(row[0]);
    for (std::size_t j = 1; j < row.size(); ++j) {
      const double y = as_number(row[j]);
      if (std::isfinite(x) && std::isfinite(y)) {
        series[j - 1].points.emplace_back(x, y);
      }
    }
  }
  // Drop all-text columns that produced no points.
  series.erase(std::remove_if(series.begin(), series.end(),
                              [](const Series& s) { return s.points.empty(); }),
               series.end());
  return series;
}

// Phase tables are laid out as [series-id, ...ordering columns..., x, y].
// Only the first column identifies the polyline; any columns between it and
// the final two (step or time indices) merely order the points within one
// series and must not split it.
std::vector<Series> phase_series(const ResultTable& t) {
  if (t.columns.size() < 2) {
    throw ComputationError("svg: table '" + t.name + "' needs >= 2 columns");
  }
  const std::size_t xcol = t.columns.size() - 2;
  const std::size_t ycol = t.columns.size() - 1;
  const bool has_key = t.columns.size() > 2;
  std::vector<Series> series;
  std::string prev_key;
  for (const auto& row : t.rows) {
    std::string key;
    if (has_key) {
      if (std::holds_alternative<double>(row[0])) {
        key = format_double(std::get<double>(row[0]));
      } else if (std::holds_alternative<bool>(row[0])) {
        key = std::get<bool>(row[0]) ? "true" : "false";
      } else {
        key = std::get<std::string>(row[0]);
      }
    }
    if (series.empty() || key != prev_key) {
      Series s;
      s.label = key;
      series.push_back(std::move(s));
      prev_key = key;
    }
    const double x = as_number(row[xcol]);
    const double y = as_number(row[ycol]);
    if (std::isfinite(x) && std::isfinite(y)) {
      series.back().points.emplace_back(x, y);
    }
  }
  return series;
}

}  // namespace

std::string render_svg(const ResultTable& t, ChartKind kind) {
  const bool log_x = kind == ChartKind::LineLogX || kind == ChartKind::LineLogLog;
  const bool log_y = kind == ChartKind::LineLogLog;
  const std::vector<Series> series =
      kind == ChartKind::Phase ? phase_series(t) : line_series(t);
  const std::string x_label =
      kind == ChartKind::Phase
          ? t.columns[t.columns.size() - 2]
          : t.columns.empty() ? std::string() : t.columns[0];
  return render_chart(series, log_x, log_y, t.name, x_label);
}

void emit_svg(const ResultTable& t, ChartKind kind, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << render_svg(t, kind);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace armsrace
