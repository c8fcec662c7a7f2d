#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tcla/rational.hpp"

namespace tcla {

/// Lines n1 x + n2 y = 0 through the origin of a 2D chart.
struct LineSet {
  struct Line {
    std::string label;
    Rat n1;
    Rat n2;
  };
  std::vector<Line> lines;
  std::string horizontal;
  std::string vertical;
  Rat range;  // plotting half-width
};

/// Chart (Lambda_N(h1), Lambda_N(h2)): the three coroot hyperplanes of sl3.
/// This chart is a shear of the usual 60-degree picture.
LineSet sl3_hyperplanes();

/// Chart (Lambda_N(c), Lambda_N(L0)): 2m y + (m^3 - m)/12 x = 0, m = 1..m_max.
LineSet virasoro_lines(int m_max);

enum class FigureFormat { csv, svg };

std::string render_csv(const LineSet& ls);
std::string render_svg(const LineSet& ls);
std::string render(const LineSet& ls, FigureFormat format);

/// Writes to `path` ("-" for stdout). Throws Error on I/O failure.
void render_to_file(const LineSet& ls, FigureFormat format, const std::string& path);

}  // namespace tcla
