#include <bundlerev/buyer.hpp>
#include <bundlerev/render.hpp>

#include <gtest/gtest.h>

namespace {

using namespace bundlerev;

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Render, ExtentCoversEveryPrice) {
  const auto p = region_partition_2(Menu::two(15, 45, 80));
  EXPECT_EQ(plot_extent(p), 100);
}

TEST(Render, SvgHasOnePolygonPerRegion) {
  for (const Menu& m : {Menu::two(15, 45, 80), Menu::two(27, 70, 85), Menu::two(2, 3, 5)}) {
    const auto svg = render_svg(region_partition_2(m), 320);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u) << svg.substr(0, 40);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(count(svg, "<polygon"), 4u) << m.to_string();
    EXPECT_EQ(count(svg, "data-bundle="), 4u);
  }
}

TEST(Render, AsciiRasterAgreesWithBuyer) {
  const Menu m = Menu::two(27, 70, 85);
  const auto p = region_partition_2(m);
  const auto text = render_ascii(p, 40, 20);
  EXPECT_NE(text.find('.'), std::string::npos);
  EXPECT_NE(text.find('1'), std::string::npos);
  EXPECT_NE(text.find('2'), std::string::npos);
  EXPECT_NE(text.find('#'), std::string::npos);
}

}  // namespace
