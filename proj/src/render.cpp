#include "bundlerev/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace bundlerev {
namespace {

struct Pt {
  double x, y;
};

// Sutherland–Hodgman clip of a convex polygon against coef1·x + coef2·y >= rhs.
std::vector<Pt> clip(const std::vector<Pt>& poly, const HalfPlane& h) {
  const double c1 = to_double(h.coef1), c2 = to_double(h.coef2), r = to_double(h.rhs);
  auto side = [&](Pt p) { return c1 * p.x + c2 * p.y - r; };
  std::vector<Pt> out;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Pt p = poly[k], q = poly[(k + 1) % poly.size()];
    const double sp = side(p), sq = side(q);
    if (sp >= 0) out.push_back(p);
    if ((sp >= 0) != (sq >= 0)) {
      const double t = sp / (sp - sq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

const char* region_name(Bundle b) {
  switch (b.mask()) {
    case 0: return "nothing";
    case 1: return "{1}";
    case 2: return "{2}";
    default: return "{1,2}";
  }
}

const char* region_fill(Bundle b) {
  static constexpr std::array<const char*, 4> fills{"#f2f2f2", "#9ecae1", "#fdae6b", "#a1d99b"};
  return fills[b.mask() & 3U];
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

Rational plot_extent(const RegionPartition2& p) {
  Rational top = std::max({p.menu.a(), p.menu.b(), p.menu.c()});
  if (sgn(top) == 0) top = 1;
  return top * 5 / 4;
}

std::string render_svg(const RegionPartition2& p, int size_px) {
  const double L = to_double(plot_extent(p));
  const double margin = 48, side = size_px;
  const double total = side + 2 * margin;
  auto sx = [&](double x) { return margin + x / L * side; };
  auto sy = [&](double y) { return margin + side - y / L * side; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total
      << "\" viewBox=\"0 0 " << total << ' ' << total << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  svg << "  <title>menu " << p.menu.to_string() << " (" << to_string(p.shape) << ")</title>\n";

  for (const auto& region : p.regions) {
    std::vector<Pt> poly{{0, 0}, {L, 0}, {L, L}, {0, L}};
    for (const auto& h : region.constraints) poly = clip(poly, h);
    if (poly.size() < 3) continue;
    svg << "  <polygon data-bundle=\"" << region_name(region.bundle) << "\" fill=\"" << region_fill(region.bundle)
        << "\" stroke=\"#333\" stroke-width=\"1\" points=\"";
    double cx = 0, cy = 0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      svg << (k ? " " : "") << fmt(sx(poly[k].x)) << ',' << fmt(sy(poly[k].y));
      cx += poly[k].x;
      cy += poly[k].y;
    }
    svg << "\"/>\n";
    cx /= poly.size();
    cy /= poly.size();
    svg << "  <text x=\"" << fmt(sx(cx)) << "\" y=\"" << fmt(sy(cy)) << "\" text-anchor=\"middle\">"
        << region_name(region.bundle) << "</text>\n";
  }

  svg << "  <line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(sx(L)) << "\" y2=\"" << fmt(sy(0))
      << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(sx(0)) << "\" y2=\"" << fmt(sy(L))
      << "\" stroke=\"black\"/>\n";
  svg << "  <text x=\"" << fmt(sx(L)) << "\" y=\"" << fmt(sy(0) + 36) << "\" text-anchor=\"end\">v1</text>\n";
  svg << "  <text x=\"" << fmt(sx(0) - 36) << "\" y=\"" << fmt(sy(L)) << "\">v2</text>\n";

  const Rational a = p.menu.a(), b = p.menu.b(), c = p.menu.c();
  auto tick_x = [&](const std::string& label, const Rational& at) {
    if (sgn(at) < 0) return;
    const double x = sx(to_double(at));
    svg << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(sy(0) + 6)
        << "\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(sy(0) + 20) << "\" text-anchor=\"middle\">" << label << "</text>\n";
  };
  auto tick_y = [&](const std::string& label, const Rational& at) {
    if (sgn(at) < 0) return;
    const double y = sy(to_double(at));
    svg << "  <line x1=\"" << fmt(sx(0) - 6) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(sx(0)) << "\" y2=\"" << fmt(y)
        << "\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << fmt(sx(0) - 9) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">" << label << "</text>\n";
  };
  tick_x("a", a);
  tick_y("b", b);
  if (c != a + b) {
    tick_x("c-b", c - b);
    tick_y("c-a", c - a);
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_ascii(const RegionPartition2& p, int width, int height) {
  const Rational L = plot_extent(p);
  std::string out;
  for (int row = 0; row < height; ++row) {
    const Rational v2 = L * (2 * (height - 1 - row) + 1) / (2 * height);
    for (int col = 0; col < width; ++col) {
      const Rational v1 = L * (2 * col + 1) / (2 * width);
      switch (p.region_of(Valuation{v1, v2}).bundle.mask()) {
        case 0: out += '.'; break;
        case 1: out += '1'; break;
        case 2: out += '2'; break;
        default: out += '#'; break;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace bundlerev
