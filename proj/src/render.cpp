#include "terngrid/render.hpp"

#include <sstream>
#include <stdexcept>

namespace terngrid {

std::string render_svg(const GridDrawing& d, const RenderSpec& spec) {
  if (spec.node_radius < 0 || spec.margin < 0 || spec.cell_size <= 2 * spec.node_radius) {
    throw std::invalid_argument("render_svg: need cell_size > 2 * node_radius and non-negative margins");
  }
  BoundingBox box = bounding_box(d, 0);
  const Coord pad = spec.margin + spec.node_radius;
  auto px = [&](Coord x) { return pad + (x - box.xmin) * spec.cell_size; };
  auto py = [&](Coord y) { return pad + (y - box.ymin) * spec.cell_size; };
  const Coord w = 2 * pad + (box.width() - 1) * spec.cell_size;
  const Coord h = 2 * pad + (box.height() - 1) * spec.cell_size;

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
    << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
    << "<g stroke=\"#333333\" stroke-width=\"1.5\">\n";
  const TernaryTree& t = d.tree();
  for (NodeId v = 1; v < t.size(); ++v) {
    const Point a = d.pos(*t.parent(v)), b = d.pos(v);
    s << "<line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\"" << px(b.x) << "\" y2=\"" << py(b.y)
      << "\"/>\n";
  }
  s << "</g>\n<g fill=\"#1f4e9c\">\n";
  for (NodeId v = 1; v < t.size(); ++v) {
    const Point p = d.pos(v);
    s << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"" << spec.node_radius << "\"/>\n";
  }
  const Point r = d.root_pos();
  s << "</g>\n<circle cx=\"" << px(r.x) << "\" cy=\"" << py(r.y) << "\" r=\"" << spec.node_radius
    << "\" fill=\"#c0392b\"/>\n</svg>\n";
  return s.str();
}

}  // namespace terngrid
