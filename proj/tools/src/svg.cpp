#include "elgi/cli/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace elgi::cli {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 500.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 56.0;
constexpr int kTicks = 6;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string coord(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
  return std::string(buf, r.ptr);
}

std::string tick_label(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;  // avoid "-0"
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  return std::string(buf, r.ptr);
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void expand(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double margin = 0.05 * (hi - lo);
    lo -= margin;
    hi += margin;
  }
};

}  // namespace

std::string render_svg(const SvgChart& chart) {
  if (chart.series.empty()) throw std::invalid_argument("render_svg: no series");

  Range xr, yr;
  for (const auto& s : chart.series) {
    for (const auto& [x, y] : s.points) {
      xr.expand(x);
      yr.expand(y);
    }
  }
  for (double h : chart.hlines) yr.expand(h);
  xr.pad();
  yr.pad();

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) { return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return kMarginTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + coord(kWidth) + "\" height=\"" +
         coord(kHeight) + "\" viewBox=\"0 0 " + coord(kWidth) + " " + coord(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += "<text x=\"" + coord(kWidth / 2) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\""
         " text-anchor=\"middle\">" + chart.title + "</text>\n";

  // Axes with tick marks and labels.
  for (int i = 0; i < kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / (kTicks - 1);
    const double gx = px(fx);
    out += "<line x1=\"" + coord(gx) + "\" y1=\"" + coord(kHeight - kMarginBottom) + "\" x2=\"" +
           coord(gx) + "\" y2=\"" + coord(kHeight - kMarginBottom + 5) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + coord(gx) + "\" y=\"" + coord(kHeight - kMarginBottom + 20) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
           tick_label(fx) + "</text>\n";

    const double fy = yr.lo + (yr.hi - yr.lo) * i / (kTicks - 1);
    const double gy = py(fy);
    out += "<line x1=\"" + coord(kMarginLeft - 5) + "\" y1=\"" + coord(gy) + "\" x2=\"" +
           coord(kMarginLeft) + "\" y2=\"" + coord(gy) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + coord(kMarginLeft - 8) + "\" y=\"" + coord(gy + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" + tick_label(fy) +
           "</text>\n";
  }
  out += "<rect x=\"" + coord(kMarginLeft) + "\" y=\"" + coord(kMarginTop) + "\" width=\"" +
         coord(plot_w) + "\" height=\"" + coord(plot_h) +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  out += "<text x=\"" + coord(kMarginLeft + plot_w / 2) + "\" y=\"" + coord(kHeight - 12) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" + chart.x_label +
         "</text>\n";
  out += "<text x=\"18\" y=\"" + coord(kMarginTop + plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         coord(kMarginTop + plot_h / 2) + ")\">" + chart.y_label + "</text>\n";

  for (double h : chart.hlines) {
    out += "<line x1=\"" + coord(px(xr.lo)) + "\" y1=\"" + coord(py(h)) + "\" x2=\"" +
           coord(px(xr.hi)) + "\" y2=\"" + coord(py(h)) +
           "\" stroke=\"#444444\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  }

  for (std::size_t i = 0; i < chart.series.size(); ++i) {
    const auto& s = chart.series[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (s.line && s.points.size() > 1) {
      out += "<polyline fill=\"none\" stroke=\"";
      out += color;
      out += "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t p = 0; p < s.points.size(); ++p) {
        if (p > 0) out += ' ';
        out += coord(px(s.points[p].first)) + "," + coord(py(s.points[p].second));
      }
      out += "\"/>\n";
    }
    if (s.markers || s.points.size() == 1) {
      for (const auto& [x, y] : s.points) {
        out += "<circle cx=\"" + coord(px(x)) + "\" cy=\"" + coord(py(y)) + "\" r=\"3\" fill=\"";
        out += color;
        out += "\"/>\n";
      }
    }
    // Legend entry.
    const double ly = kMarginTop + 16.0 + 16.0 * static_cast<double>(i);
    out += "<line x1=\"" + coord(kWidth - kMarginRight - 150) + "\" y1=\"" + coord(ly - 4) +
           "\" x2=\"" + coord(kWidth - kMarginRight - 126) + "\" y2=\"" + coord(ly - 4) +
           "\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + coord(kWidth - kMarginRight - 120) + "\" y=\"" + coord(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + s.name + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace elgi::cli
