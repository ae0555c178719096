#pragma once

#include <bundlerev/buyer.hpp>

#include <string>

namespace bundlerev {

/// Side of the plotted square [0, L]²: 5/4 of the largest corner coordinate.
Rational plot_extent(const RegionPartition2& p);

/// One filled polygon per bundle region, axis ticks at a, b, c−a, c−b.
std::string render_svg(const RegionPartition2& p, int size_px = 480);

/// Character raster sampled at cell centers: '.' nothing, '1' item 1,
/// '2' item 2, '#' the bundle. Row 0 is the top (largest v2).
std::string render_ascii(const RegionPartition2& p, int width = 60, int height = 30);

}  // namespace bundlerev
