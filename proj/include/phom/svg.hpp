#pragma once

// Static SVG 1.1 renderings of barcodes and persistence diagrams.
//
// Styling is fixed: a 640x480 canvas with 64px margins, and one color per
// homology dimension taken from `dimension_colors` (cycling past the end).
// Essential classes are drawn with an arrowhead: at the right edge in a
// barcode, on the dashed infinity line in a diagram.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "phom/pairs_file.hpp"
#include "phom/persistence.hpp"

namespace phom::svg {

inline constexpr double width = 640.0;
inline constexpr double height = 480.0;
inline constexpr double margin = 64.0;
inline constexpr double point_radius = 4.0;
inline constexpr double bar_spacing = 8.0;
inline constexpr std::array<const char*, 6> dimension_colors = {"#1f77b4", "#d62728", "#2ca02c",
                                                                "#9467bd", "#ff7f0e", "#8c564b"};

inline const char* color(int dim) { return dimension_colors[static_cast<std::size_t>(dim) % dimension_colors.size()]; }

namespace detail {

inline std::string coord(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, r.ptr);
}

inline std::string tick_label(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
  return std::string(buf, r.ptr);
}

inline void header(std::ostream& os, const char* title) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << coord(width)
     << "\" height=\"" << coord(height) << "\" viewBox=\"0 0 " << coord(width) << ' ' << coord(height)
     << "\">\n"
     << "<title>" << title << "</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << coord(width) << "\" height=\"" << coord(height)
     << "\" fill=\"white\"/>\n";
}

/// Largest finite birth or death, 0 when there is none.
inline double finite_extent(const std::vector<PersistencePair>& pairs) {
  double hi = 0.0;
  for (const auto& p : pairs) {
    hi = std::max(hi, p.birth);
    if (!p.essential())
      hi = std::max(hi, p.death);
  }
  return hi;
}

/// Five evenly spaced ticks from 0 to `top`.
inline std::vector<double> ticks(double top) {
  std::vector<double> t;
  for (int i = 0; i <= 4; ++i)
    t.push_back(top * i / 4.0);
  return t;
}

inline void horizontal_axis(std::ostream& os, double top, const char* label) {
  const double y = height - margin;
  os << "<g class=\"x-axis\">\n"
     << "<line class=\"axis\" x1=\"" << coord(margin) << "\" y1=\"" << coord(y) << "\" x2=\""
     << coord(width - margin) << "\" y2=\"" << coord(y) << "\" stroke=\"black\"/>\n";
  for (double t : ticks(top)) {
    const double x = margin + (top > 0 ? t / top : 0.0) * (width - 2 * margin);
    os << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(y) << "\" x2=\"" << coord(x) << "\" y2=\""
       << coord(y + 5) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << coord(x) << "\" y=\"" << coord(y + 18)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  os << "<text x=\"" << coord(width / 2) << "\" y=\"" << coord(height - 16)
     << "\" font-size=\"13\" text-anchor=\"middle\">" << label << "</text>\n"
     << "</g>\n";
}

inline void vertical_axis(std::ostream& os, double top, const char* label) {
  const double x = margin;
  os << "<g class=\"y-axis\">\n"
     << "<line class=\"axis\" x1=\"" << coord(x) << "\" y1=\"" << coord(margin) << "\" x2=\"" << coord(x)
     << "\" y2=\"" << coord(height - margin) << "\" stroke=\"black\"/>\n";
  for (double t : ticks(top)) {
    const double y = height - margin - (top > 0 ? t / top : 0.0) * (height - 2 * margin);
    os << "<line x1=\"" << coord(x - 5) << "\" y1=\"" << coord(y) << "\" x2=\"" << coord(x) << "\" y2=\""
       << coord(y) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << coord(x - 8) << "\" y=\"" << coord(y + 4)
       << "\" font-size=\"11\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
  }
  os << "<text x=\"16\" y=\"" << coord(height / 2) << "\" font-size=\"13\" text-anchor=\"middle\" "
     << "transform=\"rotate(-90 16 " << coord(height / 2) << ")\">" << label << "</text>\n"
     << "</g>\n";
}

inline void legend(std::ostream& os, int max_dim) {
  os << "<g class=\"legend\">\n";
  for (int d = 0; d <= max_dim; ++d) {
    const double y = margin - 40 + 14 * d;
    os << "<rect x=\"" << coord(width - margin - 40) << "\" y=\"" << coord(y - 8)
       << "\" width=\"10\" height=\"10\" fill=\"" << color(d) << "\"/>\n"
       << "<text x=\"" << coord(width - margin - 26) << "\" y=\"" << coord(y + 1)
       << "\" font-size=\"11\">H" << d << "</text>\n";
  }
  os << "</g>\n";
}

inline void arrowhead_right(std::ostream& os, double x, double y, const char* fill) {
  os << "<polygon class=\"arrow\" points=\"" << coord(x) << ',' << coord(y) << ' ' << coord(x - 8) << ','
     << coord(y - 4) << ' ' << coord(x - 8) << ',' << coord(y + 4) << "\" fill=\"" << fill << "\"/>\n";
}

inline void arrowhead_up(std::ostream& os, double x, double y, const char* fill) {
  os << "<polygon class=\"arrow\" points=\"" << coord(x) << ',' << coord(y - 6) << ' ' << coord(x - 5)
     << ',' << coord(y + 3) << ' ' << coord(x + 5) << ',' << coord(y + 3) << "\" fill=\"" << fill
     << "\"/>\n";
}

inline std::string describe(int dim, double birth, double death) {
  return "dim " + std::to_string(dim) + ": (" + format_decimal(birth) + ", " +
         (std::isinf(death) ? std::string("inf") : format_decimal(death)) + ")";
}

} // namespace detail

/// One horizontal bar per pair, grouped by dimension (lowest first, top of
/// the plot). Zero-length bars are drawn as they are; filter beforehand if
/// they are unwanted.
inline void render_barcode(std::ostream& os, const Barcode& barcode) {
  const auto& bars = barcode.bars();
  double top = detail::finite_extent(bars) * 1.05;
  if (top <= 0.0)
    top = 1.0;
  const double plot_w = width - 2 * margin;
  auto x_of = [&](double v) { return margin + v / top * plot_w; };

  detail::header(os, "Persistence barcode");
  detail::horizontal_axis(os, top, "scale");

  const std::size_t groups = bars.empty() ? 0 : static_cast<std::size_t>(barcode.max_dimension() + 1);
  const double available = height - 2 * margin;
  const double needed = static_cast<double>(bars.size() + groups) * bar_spacing;
  const double step = needed > available ? available / static_cast<double>(bars.size() + groups) : bar_spacing;

  double y = margin + step;
  int current = -1;
  for (const auto& b : bars) {
    if (b.dim != current) {
      if (current != -1)
        y += step;
      current = b.dim;
      os << "<text class=\"group-label\" x=\"" << detail::coord(margin - 8) << "\" y=\""
         << detail::coord(y + 4) << "\" font-size=\"11\" text-anchor=\"end\">H" << b.dim << "</text>\n";
    }
    const double x0 = x_of(b.birth);
    const double x1 = b.essential() ? width - margin : x_of(b.death);
    os << "<g class=\"bar dim-" << b.dim << "\">\n"
       << "<title>" << detail::describe(b.dim, b.birth, b.death) << "</title>\n"
       << "<line x1=\"" << detail::coord(x0) << "\" y1=\"" << detail::coord(y) << "\" x2=\""
       << detail::coord(x1) << "\" y2=\"" << detail::coord(y) << "\" stroke=\"" << color(b.dim)
       << "\" stroke-width=\"" << detail::coord(std::max(1.0, step * 0.6)) << "\"/>\n";
    if (b.essential())
      detail::arrowhead_right(os, x1 + 8, y, color(b.dim));
    os << "</g>\n";
    y += step;
  }
  if (!bars.empty())
    detail::legend(os, barcode.max_dimension());
  os << "</svg>\n";
}

/// Scatter of (birth, death) above the dashed x = y diagonal. A point of
/// multiplicity > 1 carries its multiplicity as a numeral to its right.
/// Essential points sit on the infinity line: the diagram's cap if set,
/// otherwise 10% above the largest finite value.
inline void render_diagram(std::ostream& os, const PersistenceDiagram& diagram) {
  double finite = 0.0;
  bool has_essential = false;
  int max_dim = -1;
  for (const auto& p : diagram.points) {
    finite = std::max(finite, p.birth);
    if (std::isinf(p.death))
      has_essential = true;
    else
      finite = std::max(finite, p.death);
    max_dim = std::max(max_dim, p.dim);
  }
  double cap = diagram.infinity_cap.value_or(finite > 0.0 ? finite * 1.1 : 1.0);
  double top = std::max(finite, has_essential ? cap : 0.0) * 1.05;
  if (top <= 0.0)
    top = 1.0;
  const double plot_w = width - 2 * margin;
  const double plot_h = height - 2 * margin;
  auto x_of = [&](double v) { return margin + v / top * plot_w; };
  auto y_of = [&](double v) { return height - margin - v / top * plot_h; };

  detail::header(os, "Persistence diagram");
  detail::horizontal_axis(os, top, "birth");
  detail::vertical_axis(os, top, "death");

  os << "<line class=\"diagonal\" x1=\"" << detail::coord(x_of(0)) << "\" y1=\"" << detail::coord(y_of(0))
     << "\" x2=\"" << detail::coord(x_of(top)) << "\" y2=\"" << detail::coord(y_of(top))
     << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  if (has_essential)
    os << "<line class=\"infinity\" x1=\"" << detail::coord(x_of(0)) << "\" y1=\"" << detail::coord(y_of(cap))
       << "\" x2=\"" << detail::coord(x_of(top)) << "\" y2=\"" << detail::coord(y_of(cap))
       << "\" stroke=\"gray\" stroke-dasharray=\"2 2\"/>\n"
       << "<text x=\"" << detail::coord(margin - 8) << "\" y=\"" << detail::coord(y_of(cap) + 4)
       << "\" font-size=\"13\" text-anchor=\"end\">&#8734;</text>\n";

  for (const auto& p : diagram.points) {
    const double cx = x_of(p.birth);
    const double cy = y_of(std::isinf(p.death) ? cap : p.death);
    os << "<g class=\"point dim-" << p.dim << "\">\n"
       << "<title>" << detail::describe(p.dim, p.birth, p.death);
    if (p.multiplicity > 1)
      os << " x" << p.multiplicity;
    os << "</title>\n";
    if (std::isinf(p.death))
      detail::arrowhead_up(os, cx, cy, color(p.dim));
    else
      os << "<circle cx=\"" << detail::coord(cx) << "\" cy=\"" << detail::coord(cy) << "\" r=\""
         << detail::coord(point_radius) << "\" fill=\"" << color(p.dim) << "\"/>\n";
    if (p.multiplicity > 1)
      os << "<text class=\"multiplicity\" x=\"" << detail::coord(cx + 7) << "\" y=\"" << detail::coord(cy - 5)
         << "\" font-size=\"11\">" << p.multiplicity << "</text>\n";
    os << "</g>\n";
  }
  if (max_dim >= 0)
    detail::legend(os, max_dim);
  os << "</svg>\n";
}

} // namespace phom::svg
