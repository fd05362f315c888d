#include "qse/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qse {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 560;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 60;

struct Frame {
  double x_min, x_max, y_min, y_max;

  double px(double x) const {
    return kMarginLeft + (x - x_min) / (x_max - x_min) * (kWidth - kMarginLeft - kMarginRight);
  }
  double py(double y) const {
    return kHeight - kMarginBottom -
           (y - y_min) / (y_max - y_min) * (kHeight - kMarginTop - kMarginBottom);
  }
};

// Fixed two-decimal pixel coordinates keep the output byte-stable.
std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void open_svg(std::ostream& out, const std::string& title, const std::string& y_label) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
         "anisotropy &#916;</text>\n";
  out << "<text x=\"18\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
         "transform=\"rotate(-90 18 " << kHeight / 2 << ")\">" << y_label
      << "</text>\n";
}

void draw_axes(std::ostream& out, const Frame& f) {
  out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << kWidth - kMarginLeft - kMarginRight << "\" height=\""
      << kHeight - kMarginTop - kMarginBottom
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = f.x_min + (f.x_max - f.x_min) * i / 5.0;
    const double y = f.y_min + (f.y_max - f.y_min) * i / 5.0;
    out << "<text x=\"" << coord(f.px(x)) << "\" y=\"" << kHeight - kMarginBottom + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << coord(x) << "</text>\n";
    out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << coord(f.py(y) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << coord(y) << "</text>\n";
  }
}

void polyline(std::ostream& out, const Frame& f, const std::vector<ScanRecord>& records,
              double ScanRecord::* field, const std::string& color) {
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
  bool first = true;
  for (const ScanRecord& r : records) {
    if (!first) out << ' ';
    out << coord(f.px(r.delta)) << ',' << coord(f.py(r.*field));
    first = false;
  }
  out << "\"/>\n";
}

Frame make_frame(const std::vector<ScanRecord>& records, double y_min, double y_max) {
  Frame f{records.front().delta, records.back().delta, y_min, y_max};
  if (f.x_max <= f.x_min) f.x_max = f.x_min + 1.0;
  if (f.y_max <= f.y_min) f.y_max = f.y_min + 1.0;
  return f;
}

void require_records(const std::vector<ScanRecord>& records) {
  if (records.size() < 2)
    throw std::invalid_argument("plotting needs at least two records");
}

}  // namespace

void render_semiaxes_svg(std::ostream& out, const std::vector<ScanRecord>& records) {
  require_records(records);
  double y_max = 0.0;
  for (const ScanRecord& r : records)
    y_max = std::max({y_max, r.s_x, r.s_y, r.s_z});
  const Frame f = make_frame(records, 0.0, y_max * 1.05);

  open_svg(out, "Steering ellipsoid semiaxes", "semiaxis length");
  draw_axes(out, f);
  polyline(out, f, records, &ScanRecord::s_x, "#1f77b4");
  polyline(out, f, records, &ScanRecord::s_y, "#2ca02c");
  polyline(out, f, records, &ScanRecord::s_z, "#d62728");
  out << "<text x=\"" << kWidth - 140 << "\" y=\"50\" font-family=\"sans-serif\" "
         "font-size=\"13\" fill=\"#1f77b4\">s_x</text>\n";
  out << "<text x=\"" << kWidth - 140 << "\" y=\"68\" font-family=\"sans-serif\" "
         "font-size=\"13\" fill=\"#2ca02c\">s_y</text>\n";
  out << "<text x=\"" << kWidth - 140 << "\" y=\"86\" font-family=\"sans-serif\" "
         "font-size=\"13\" fill=\"#d62728\">s_z</text>\n";
  out << "</svg>\n";
}

void render_volume_svg(std::ostream& out, const std::vector<ScanRecord>& records) {
  require_records(records);
  double y_max = 0.0;
  for (const ScanRecord& r : records) y_max = std::max(y_max, r.volume);
  const Frame f = make_frame(records, 0.0, y_max * 1.05);

  open_svg(out, "Steering ellipsoid volume", "volume V_A");
  draw_axes(out, f);
  polyline(out, f, records, &ScanRecord::volume, "#9467bd");
  out << "</svg>\n";
}

}  // namespace qse
