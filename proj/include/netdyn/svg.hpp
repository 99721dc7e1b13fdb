#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace netdyn {

/// Writes a standalone 800x400 SVG line chart of `values` (expected in
/// [0, 1]) against their 1-based position, with y ticks at 0, 0.5 and 1.
void write_line_chart_svg(std::ostream& out, const std::string& title,
                          std::span<const double> values);

}  // namespace netdyn
