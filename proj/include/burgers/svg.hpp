#pragma once

// Minimal SVG line plots: axes, a frame, one polyline per series.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "burgers/exact_rational.hpp"
#include "burgers/table.hpp"
#include "burgers/version.hpp"

namespace burgers {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotOptions {
  int width = 640;
  int height = 420;
  std::string title;
  std::string x_label;
  std::string y_label;
};

namespace detail {

inline std::string fmt(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string escape_xml(const std::string& s) {
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

}  // namespace detail

inline std::string render_svg(const std::vector<PlotSeries>& series, const PlotOptions& opt = {}) {
  static constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                             "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  const double left = 70, right = 20, top = 40, bottom = 50;
  const double pw = opt.width - left - right, ph = opt.height - top - bottom;
  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\"" << opt.height
     << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n";
  os << "<!-- burgers-exact " << kVersion << " -->\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height << "\" fill=\"white\"/>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (ymin < 0 && ymax > 0) {
    os << "<line x1=\"" << left << "\" y1=\"" << detail::fmt(py(0)) << "\" x2=\"" << left + pw << "\" y2=\""
       << detail::fmt(py(0)) << "\" stroke=\"#aaaaaa\" stroke-dasharray=\"4 3\"/>\n";
  }
  if (xmin < 0 && xmax > 0) {
    os << "<line x1=\"" << detail::fmt(px(0)) << "\" y1=\"" << top << "\" x2=\"" << detail::fmt(px(0)) << "\" y2=\""
       << top + ph << "\" stroke=\"#aaaaaa\" stroke-dasharray=\"4 3\"/>\n";
  }
  auto text = [&](double x, double y, const std::string& s, const char* anchor) {
    os << "<text x=\"" << detail::fmt(x, 1) << "\" y=\"" << detail::fmt(y, 1)
       << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"" << anchor << "\">" << detail::escape_xml(s)
       << "</text>\n";
  };
  text(left, top + ph + 18, detail::fmt(xmin, 4), "start");
  text(left + pw, top + ph + 18, detail::fmt(xmax, 4), "end");
  text(left - 6, top + ph, detail::fmt(ymin, 4), "end");
  text(left - 6, top + 10, detail::fmt(ymax, 4), "end");
  if (!opt.x_label.empty()) text(left + pw / 2, top + ph + 38, opt.x_label, "middle");
  if (!opt.y_label.empty()) text(14, top + ph / 2, opt.y_label, "start");
  if (!opt.title.empty()) text(left + pw / 2, 22, opt.title, "middle");

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    // Non-finite samples split the curve.
    std::vector<std::string> runs(1);
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        if (!runs.back().empty()) runs.emplace_back();
        continue;
      }
      runs.back() += detail::fmt(px(s.x[i]), 2) + "," + detail::fmt(py(s.y[i]), 2) + " ";
    }
    for (const auto& pts : runs) {
      if (pts.empty()) continue;
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
    }
    text(left + pw - 8, top + 16 + 14 * static_cast<double>(k), s.label, "end");
    os << "<line x1=\"" << left + pw - 4 << "\" y1=\"" << top + 12 + 14 * static_cast<double>(k) << "\" x2=\""
       << left + pw - 1 << "\" y2=\"" << top + 12 + 14 * static_cast<double>(k) << "\" stroke=\"" << color
       << "\" stroke-width=\"3\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline double parse_cell(const std::string& cell) {
  if (cell.empty() || cell == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (cell == "inf") return std::numeric_limits<double>::infinity();
  if (cell == "-inf") return -std::numeric_limits<double>::infinity();
  return exact::to_double(exact::parse(cell));
}

/// Series from table columns: one series per y column, or, with a group
/// column, one series per distinct group value (in order of appearance).
inline std::vector<PlotSeries> table_series(const OutputTable& t, const std::string& x_col,
                                            const std::vector<std::string>& y_cols,
                                            const std::optional<std::string>& group_col = std::nullopt) {
  std::vector<PlotSeries> out;
  const auto& xs = t.column(x_col);
  for (const auto& yc : y_cols) {
    const auto& ys = t.column(yc);
    if (!group_col) {
      PlotSeries s{yc, {}, {}};
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s.x.push_back(parse_cell(xs[i]));
        s.y.push_back(parse_cell(ys[i]));
      }
      out.push_back(std::move(s));
      continue;
    }
    const auto& gs = t.column(*group_col);
    std::vector<std::string> order;
    std::map<std::string, PlotSeries> by_group;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto [it, inserted] = by_group.try_emplace(gs[i]);
      if (inserted) {
        order.push_back(gs[i]);
        it->second.label = (y_cols.size() > 1 ? yc + " " : "") + *group_col + "=" + gs[i];
      }
      it->second.x.push_back(parse_cell(xs[i]));
      it->second.y.push_back(parse_cell(ys[i]));
    }
    for (const auto& g : order) out.push_back(std::move(by_group[g]));
  }
  return out;
}

}  // namespace burgers
