#include "cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <utility>

namespace tfmult::cli {
namespace {

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

struct Series {
  std::string label;
  bool dashed = false;
  std::vector<std::pair<double, double>> points;
};

std::string svg_number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::optional<double> ResultRow::relative_deviation() const {
  if (!predicted || *predicted == 0.0 || !std::isfinite(*predicted)) return std::nullopt;
  return std::abs(measured - *predicted) / std::abs(*predicted);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0 as well
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

std::vector<std::string> csv_header(const ResultTable& table) {
  std::vector<std::string> header{"experiment", "quantity"};
  header.insert(header.end(), table.param_names.begin(), table.param_names.end());
  for (const char* c : {"measured", "predicted", "relative_deviation", "refinement", "status"}) {
    header.emplace_back(c);
  }
  return header;
}

std::vector<std::string> csv_fields(const ResultTable& table, const ResultRow& row) {
  if (row.params.size() != table.param_names.size()) {
    throw std::logic_error("result row has " + std::to_string(row.params.size()) +
                           " parameters, table declares " +
                           std::to_string(table.param_names.size()));
  }
  std::vector<std::string> fields{row.experiment, row.quantity};
  for (double p : row.params) fields.push_back(format_number(p));
  fields.push_back(format_number(row.measured));
  fields.push_back(optional_number(row.predicted));
  fields.push_back(optional_number(row.relative_deviation()));
  fields.push_back(optional_number(row.refinement));
  fields.emplace_back(row.passed ? "pass" : "fail");
  return fields;
}

void emit_csv(const ResultTable& table, std::ostream& out) {
  auto write = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      out << fields[i];
    }
    out << '\n';
  };
  write(csv_header(table));
  for (const auto& row : table.rows) write(csv_fields(table, row));
}

void emit_csv(const ResultTable& table, const std::string& path) {
  auto out = open_output(path);
  emit_csv(table, out);
}

void emit_svg(const ResultTable& table, const std::string& x_column,
              const std::vector<std::string>& y_columns, std::ostream& out) {
  const auto x_it = std::find(table.param_names.begin(), table.param_names.end(), x_column);
  if (!table.rows.empty() && x_it == table.param_names.end()) {
    throw std::invalid_argument("unknown x column '" + x_column + "'");
  }
  const auto x_index = static_cast<std::size_t>(x_it - table.param_names.begin());

  // Series keyed by (quantity, column) in first-appearance order.
  std::vector<Series> series;
  std::map<std::string, std::size_t> slot;
  for (const auto& row : table.rows) {
    for (const auto& column : y_columns) {
      std::optional<double> y;
      if (column == "measured") y = row.measured;
      else if (column == "predicted") y = row.predicted;
      else if (column == "refinement") y = row.refinement;
      else throw std::invalid_argument("unknown y column '" + column + "'");
      if (!y || !std::isfinite(*y) || !std::isfinite(row.params[x_index])) continue;
      const std::string key = row.quantity + " " + column;
      auto [it, inserted] = slot.emplace(key, series.size());
      if (inserted) series.push_back(Series{key, column == "predicted", {}});
      series[it->second].points.emplace_back(row.params[x_index], *y);
    }
  }

  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  bool first = true;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (first) {
        x0 = x1 = x;
        y0 = y1 = y;
        first = false;
      }
      x0 = std::min(x0, x); x1 = std::max(x1, x);
      y0 = std::min(y0, y); y1 = std::max(y1, y);
    }
  }
  if (x1 == x0) { x0 -= 0.5; x1 += 0.5; }
  if (y1 == y0) { y0 -= 0.5 * std::max(1.0, std::abs(y0)); y1 += 0.5 * std::max(1.0, std::abs(y1)); }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  constexpr double kW = 640, kH = 420, kLeft = 80, kRight = 180, kTop = 30, kBottom = 50;
  const double plot_w = kW - kLeft - kRight, plot_h = kH - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
  auto sy = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes with five ticks each.
  out << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\"/>\n</g>\n";
  out << "<g fill=\"black\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    out << "<text x=\"" << svg_number(sx(xv)) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << escape(format_number(std::stod(svg_number(xv)))) << "</text>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << svg_number(sy(yv) + 4)
        << "\" text-anchor=\"end\">" << escape(format_number(std::stod(svg_number(yv)))) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kH - 10 << "\" text-anchor=\"middle\">"
      << escape(x_column) << "</text>\n</g>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* colour = kPalette[i % std::size(kPalette)];
    if (s.points.size() == 1) {
      out << "<circle cx=\"" << svg_number(sx(s.points[0].first)) << "\" cy=\""
          << svg_number(sy(s.points[0].second)) << "\" r=\"4\" fill=\"" << colour << "\"/>\n";
    } else {
      out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\""
          << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"";
      for (std::size_t k = 0; k < s.points.size(); ++k) {
        if (k) out << ' ';
        out << svg_number(sx(s.points[k].first)) << ',' << svg_number(sy(s.points[k].second));
      }
      out << "\"/>\n";
    }
    const double ly = kTop + 14.0 + 18.0 * static_cast<double>(i);
    out << "<line x1=\"" << kLeft + plot_w + 12 << "\" y1=\"" << ly - 4 << "\" x2=\""
        << kLeft + plot_w + 32 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"" << (s.dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n"
        << "<text x=\"" << kLeft + plot_w + 38 << "\" y=\"" << ly << "\">" << escape(s.label)
        << "</text>\n";
  }
  out << "</svg>\n";
}

void emit_svg(const ResultTable& table, const std::string& x_column,
              const std::vector<std::string>& y_columns, const std::string& path) {
  auto out = open_output(path);
  emit_svg(table, x_column, y_columns, out);
}

}  // namespace tfmult::cli
