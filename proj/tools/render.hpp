#pragma once

#include <string>

#include "fernhex/lattice.hpp"

namespace fernhex {

/// Text picture, top row first. Each unit triangle takes one character at
/// twice its centroid's horizontal position: '^' for Up, 'v' for Down, and
/// '*' for cells of `highlight` (the fern).
std::string render_ascii(const TriRegion &region, const TriRegion &highlight = {});

/// Standalone SVG with every triangle as a polygon; highlight cells are drawn
/// in a second colour. Output depends only on the arguments.
std::string render_svg(const TriRegion &region, const TriRegion &highlight = {}, double unit = 24.0);

/// One "u,v,orient" line per cell after a header.
std::string render_csv(const TriRegion &region);

} // namespace fernhex
