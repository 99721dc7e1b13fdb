#include "netdyn/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace netdyn {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 400;
constexpr double kLeft = 60;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 40;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_line_chart_svg(std::ostream& out, const std::string& title,
                          std::span<const double> values) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t n = values.size();
  const auto x_of = [&](std::size_t i) {
    return n <= 1 ? kLeft : kLeft + plot_w * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  const auto y_of = [&](double v) {
    return kTop + plot_h * (1.0 - std::clamp(v, 0.0, 1.0));
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 400\" "
         "width=\"800\" height=\"400\">\n";
  out << "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n";
  out << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">" << escape(title) << "</text>\n";

  // Axes and y ticks.
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\""
      << num(kLeft) << "\" y2=\"" << num(kTop + plot_h) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
      << num(kLeft + plot_w) << "\" y2=\"" << num(kTop + plot_h)
      << "\" stroke=\"black\"/>\n";
  for (const char* tick : {"0", "0.5", "1"}) {
    const double y = y_of(std::stod(tick));
    out << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(y) << "\" x2=\""
        << num(kLeft) << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
        << tick << "</text>\n";
  }
  if (n > 0) {
    for (std::size_t i : {std::size_t{0}, n - 1}) {
      out << "<text x=\"" << num(x_of(i)) << "\" y=\"" << num(kTop + plot_h + 18)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
          << i + 1 << "</text>\n";
      if (n == 1) break;
    }
  }

  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out << ' ';
    out << num(x_of(i)) << ',' << num(y_of(values[i]));
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace netdyn
