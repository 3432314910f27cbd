#ifndef ELGI_CLI_SVG_HPP
#define ELGI_CLI_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace elgi::cli {

struct SvgSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
  bool line = true;
  bool markers = false;
};

// Minimal static line/scatter chart. Rendering is a pure function of the
// data: identical inputs produce byte-identical SVG. Styling is inline; the
// file has no external references.
struct SvgChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SvgSeries> series;
  std::vector<double> hlines;  // horizontal reference lines (e.g. the D = 0 bound)
};

std::string render_svg(const SvgChart& chart);

}  // namespace elgi::cli

#endif  // ELGI_CLI_SVG_HPP
