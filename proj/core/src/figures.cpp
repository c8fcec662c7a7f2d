#include "tcla/figures.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "tcla/errors.hpp"

namespace tcla {

LineSet sl3_hyperplanes() {
  LineSet ls;
  ls.lines = {{"alpha1", 1, 0}, {"alpha2", 0, 1}, {"alpha1+alpha2", 1, 1}};
  ls.horizontal = "Lambda_N(h1)";
  ls.vertical = "Lambda_N(h2)";
  ls.range = 10;
  return ls;
}

LineSet virasoro_lines(int m_max) {
  if (m_max < 1) throw InputError("m_max must be >= 1");
  LineSet ls;
  for (int m = 1; m <= m_max; ++m) {
    const Int mm = m;
    Rat n1(mm * mm * mm - mm, 12);
    n1.canonicalize();
    ls.lines.push_back({"m=" + std::to_string(m), n1, Rat(2 * m)});
  }
  ls.horizontal = "Lambda_N(c)";
  ls.vertical = "Lambda_N(L0)";
  ls.range = 24;
  return ls;
}

std::string render_csv(const LineSet& ls) {
  std::string out = "label,n1,n2\n";
  for (const auto& l : ls.lines) out += l.label + "," + to_string(l.n1) + "," + to_string(l.n2) + "\n";
  return out;
}

namespace {

constexpr int kSize = 600;
constexpr int kMargin = 20;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Point {
  Rat x;
  Rat y;
};

// chart coordinates -> pixel coordinates, y pointing up
Point to_pixels(const Point& p, const Rat& range) {
  const Rat half(kSize / 2);
  const Rat scale = Rat(kSize / 2 - kMargin) / range;
  return {half + p.x * scale, half - p.y * scale};
}

std::string fmt(const Rat& q) { return to_fixed(q, 3); }

}  // namespace

std::string render_svg(const LineSet& ls) {
  if (sgn(ls.range) <= 0) throw InputError("figure range must be positive");
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kSize << " " << kSize << "\" width=\"" << kSize
     << "\" height=\"" << kSize << "\">\n";
  os << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize - 2 * kMargin << "\" height=\""
     << kSize - 2 * kMargin << "\" fill=\"white\" stroke=\"#999999\"/>\n";

  const Point left = to_pixels({-ls.range, 0}, ls.range);
  const Point right = to_pixels({ls.range, 0}, ls.range);
  const Point bottom = to_pixels({0, -ls.range}, ls.range);
  const Point top = to_pixels({0, ls.range}, ls.range);
  os << "  <line x1=\"" << fmt(left.x) << "\" y1=\"" << fmt(left.y) << "\" x2=\"" << fmt(right.x) << "\" y2=\""
     << fmt(right.y) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
  os << "  <line x1=\"" << fmt(bottom.x) << "\" y1=\"" << fmt(bottom.y) << "\" x2=\"" << fmt(top.x) << "\" y2=\""
     << fmt(top.y) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
  os << "  <text x=\"" << kSize - kMargin << "\" y=\"" << kSize - 4 << "\" text-anchor=\"end\" font-size=\"12\">"
     << escape(ls.horizontal) << "</text>\n";
  os << "  <text x=\"4\" y=\"14\" font-size=\"12\">" << escape(ls.vertical) << "</text>\n";

  for (const auto& l : ls.lines) {
    if (sgn(l.n1) == 0 && sgn(l.n2) == 0) throw InputError("line '" + l.label + "' has a zero normal");
    // direction (-n2, n1), stretched until it touches the range box
    const Rat dx = -l.n2;
    const Rat dy = l.n1;
    const Rat reach = std::max(abs(dx), abs(dy));
    const Rat t = ls.range / reach;
    const Point a = to_pixels({-dx * t, -dy * t}, ls.range);
    const Point b = to_pixels({dx * t, dy * t}, ls.range);
    os << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
       << "\" stroke=\"#1f4e9a\" stroke-width=\"2\"/>\n";
    os << "  <text x=\"" << fmt(b.x) << "\" y=\"" << fmt(b.y) << "\" font-size=\"12\" fill=\"#1f4e9a\">"
       << escape(l.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const LineSet& ls, FigureFormat format) {
  return format == FigureFormat::csv ? render_csv(ls) : render_svg(ls);
}

void render_to_file(const LineSet& ls, FigureFormat format, const std::string& path) {
  const std::string text = render(ls, format);
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace tcla
