#pragma once

#include <string>

#include "terngrid/geometry.hpp"

namespace terngrid {

struct RenderSpec {
  int cell_size = 16;   // pixels per grid unit
  int node_radius = 4;  // pixels
  int margin = 8;       // pixels
};

/// SVG 1.1 document: edges as lines, nodes as filled circles, root in red.
/// y-down grid coordinates map straight onto SVG coordinates. Throws
/// std::invalid_argument unless cell_size > 2 * node_radius.
std::string render_svg(const GridDrawing& d, const RenderSpec& spec = {});

}  // namespace terngrid
