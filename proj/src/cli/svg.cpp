#include <algorithm>
#include <cstdio>
#include <fstream>

#include "nlmod/cli/config.hpp"
#include "nlmod/cli/output.hpp"

namespace nlmod::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Chart& chart) {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  if (!chart.x.empty()) {
    const auto [xmin, xmax] = std::minmax_element(chart.x.begin(), chart.x.end());
    const auto [ymin, ymax] = std::minmax_element(chart.y.begin(), chart.y.end());
    x0 = *xmin;
    x1 = *xmax;
    y0 = std::min(0.0, *ymin);
    y1 = std::max(0.0, *ymax);
  }
  if (x1 == x0) x1 = x0 + 1.0;
  if (y1 == y0) y1 = y0 + 1.0;
  if (chart.style == ChartStyle::stem) {
    const double pad = 0.5 * (x1 - x0) / std::max<std::size_t>(chart.x.size(), 1);
    x0 -= pad;
    x1 += pad;
  }

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth) + "\" height=\"" +
       fixed(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
       escape(chart.title) + "</text>\n";
  s += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(pw) +
       "\" height=\"" + fixed(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(sy(0.0)) + "\" x2=\"" + fixed(kLeft + pw) +
       "\" y2=\"" + fixed(sy(0.0)) + "\" stroke=\"#999\" stroke-dasharray=\"3,3\"/>\n";

  // Axis extremes as tick labels.
  s += "<text x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop + ph + 16) + "\" text-anchor=\"middle\">" +
       tick(x0) + "</text>\n";
  s += "<text x=\"" + fixed(kLeft + pw) + "\" y=\"" + fixed(kTop + ph + 16) +
       "\" text-anchor=\"middle\">" + tick(x1) + "</text>\n";
  s += "<text x=\"" + fixed(kLeft - 6) + "\" y=\"" + fixed(kTop + 4) + "\" text-anchor=\"end\">" +
       tick(y1) + "</text>\n";
  s += "<text x=\"" + fixed(kLeft - 6) + "\" y=\"" + fixed(kTop + ph + 4) + "\" text-anchor=\"end\">" +
       tick(y0) + "</text>\n";
  s += "<text x=\"" + fixed(kLeft + pw / 2) + "\" y=\"" + fixed(kHeight - 16) +
       "\" text-anchor=\"middle\">" + escape(chart.x_label) + "</text>\n";
  s += "<text transform=\"translate(20," + fixed(kTop + ph / 2) +
       ") rotate(-90)\" text-anchor=\"middle\">" + escape(chart.y_label) + "</text>\n";

  if (chart.style == ChartStyle::line) {
    s += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < chart.x.size(); ++i) {
      if (i) s += ' ';
      s += fixed(sx(chart.x[i])) + "," + fixed(sy(chart.y[i]));
    }
    s += "\"/>\n";
  } else {
    for (std::size_t i = 0; i < chart.x.size(); ++i) {
      const std::string x = fixed(sx(chart.x[i]));
      s += "<line x1=\"" + x + "\" y1=\"" + fixed(sy(0.0)) + "\" x2=\"" + x + "\" y2=\"" +
           fixed(sy(chart.y[i])) + "\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n";
      s += "<circle cx=\"" + x + "\" cy=\"" + fixed(sy(chart.y[i])) + "\" r=\"2.5\" fill=\"#1f5fa8\"/>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

void write_svg(const std::filesystem::path& path, const Chart& chart) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
  out << render_svg(chart);
  if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

}  // namespace nlmod::cli
