#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tcla/criterion.hpp"
#include "tcla/errors.hpp"
#include "tcla/figures.hpp"

namespace tcla {
namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TCLA_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(in.good()) << name;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Figures, Sl3Lines) {
  const auto ls = sl3_hyperplanes();
  ASSERT_EQ(ls.lines.size(), 3U);
  EXPECT_EQ(ls.lines[2].label, "alpha1+alpha2");
  EXPECT_EQ(ls.lines[2].n1, Rat(1));
  EXPECT_EQ(ls.lines[2].n2, Rat(1));
}

TEST(Figures, VirasoroSlopes) {
  const auto ls = virasoro_lines(6);
  ASSERT_EQ(ls.lines.size(), 6U);
  for (int m = 1; m <= 6; ++m) {
    const auto& l = ls.lines[static_cast<std::size_t>(m - 1)];
    EXPECT_EQ(l.label, "m=" + std::to_string(m));
    // L0 = -(n1 / n2) c on the line
    EXPECT_EQ(-l.n1 / l.n2, ratio(1 - m * m, 24));
  }
  EXPECT_THROW(virasoro_lines(0), InputError);
}

TEST(Figures, LinesAreCriterionHyperplanes) {
  const TruncatedAlgebra sl3(make_algebra("sl3"), 1);
  for (const auto& l : sl3_hyperplanes().lines) {
    // a point on the line: (n2, -n1)
    const WeightFunctional lambda({{Rat(1), Rat(1)}, {l.n2, -l.n1}});
    const auto v = criterion_reducible(lambda, sl3, 2);
    EXPECT_TRUE(v.reducible) << l.label;
  }
  const TruncatedAlgebra vir(make_algebra("virasoro"), 1);
  const auto lines = virasoro_lines(5);
  for (std::size_t k = 0; k < lines.lines.size(); ++k) {
    const auto& l = lines.lines[k];
    // horizontal axis is c, vertical is L0
    const WeightFunctional lambda({{Rat(0), Rat(0)}, {-l.n1, l.n2}});
    const auto v = criterion_reducible(lambda, vir, 6);
    ASSERT_TRUE(v.reducible) << l.label;
    EXPECT_EQ(vir.base().root_label(v.witnesses.front()), l.label);
  }
}

TEST(Figures, MatchGoldenFiles) {
  EXPECT_EQ(render_csv(sl3_hyperplanes()), golden("sl3.csv"));
  EXPECT_EQ(render_csv(virasoro_lines(4)), golden("virasoro_m4.csv"));
  EXPECT_EQ(render_svg(sl3_hyperplanes()), golden("sl3.svg"));
  EXPECT_EQ(render_svg(virasoro_lines(4)), golden("virasoro_m4.svg"));
}

TEST(Figures, SvgIsDeterministicAndWellFormed) {
  const auto svg = render_svg(virasoro_lines(3));
  EXPECT_EQ(svg, render_svg(virasoro_lines(3)));
  EXPECT_EQ(svg.rfind("<svg", 0), 0U);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find(">m=3</text>"), std::string::npos);
}

}  // namespace
}  // namespace tcla
