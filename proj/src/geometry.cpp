#include "terngrid/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace terngrid {

void BoundingBox::include(Point p) {
  xmin = std::min(xmin, p.x);
  xmax = std::max(xmax, p.x);
  ymin = std::min(ymin, p.y);
  ymax = std::max(ymax, p.y);
}

void BoundingBox::include(const BoundingBox& b) {
  xmin = std::min(xmin, b.xmin);
  xmax = std::max(xmax, b.xmax);
  ymin = std::min(ymin, b.ymin);
  ymax = std::max(ymax, b.ymax);
}

GridDrawing::GridDrawing(std::shared_ptr<const TernaryTree> tree, std::vector<Point> pos)
    : tree_(std::move(tree)), pos_(std::move(pos)) {
  if (!tree_) throw std::invalid_argument("GridDrawing: null tree");
  if (static_cast<NodeId>(pos_.size()) != tree_->size()) {
    throw std::invalid_argument("GridDrawing: one position per node required");
  }
}

GridDrawing GridDrawing::point() {
  static const auto single = std::make_shared<const TernaryTree>();
  return GridDrawing(single, {Point{0, 0}});
}

GridDrawing translate(const GridDrawing& d, Coord dx, Coord dy) {
  std::vector<Point> pos(d.positions().begin(), d.positions().end());
  for (Point& p : pos) {
    p.x += dx;
    p.y += dy;
  }
  return GridDrawing(d.tree_ptr(), std::move(pos));
}

Point rotate_point(Point p, Point pivot, int quarter_turns_cw) {
  const int q = ((quarter_turns_cw % 4) + 4) % 4;
  Coord x = p.x - pivot.x;
  Coord y = p.y - pivot.y;
  for (int i = 0; i < q; ++i) {
    // Screen-clockwise with y down: up (0,-1) goes to right (1,0).
    const Coord nx = -y;
    y = x;
    x = nx;
  }
  return {pivot.x + x, pivot.y + y};
}

GridDrawing rotate(const GridDrawing& d, int quarter_turns_cw) {
  const Point pivot = d.root_pos();
  std::vector<Point> pos;
  pos.reserve(d.size());
  for (Point p : d.positions()) pos.push_back(rotate_point(p, pivot, quarter_turns_cw));
  return GridDrawing(d.tree_ptr(), std::move(pos));
}

Extents extents_of(std::span<const Point> pts, Point pivot) {
  BoundingBox box{pivot.x, pivot.x, pivot.y, pivot.y};
  for (Point p : pts) box.include(p);
  Extents e;
  e.width = box.width();
  e.height = box.height();
  e.left = pivot.x - box.xmin;
  e.right = box.xmax - pivot.x;
  e.top = pivot.y - box.ymin;
  e.bottom = box.ymax - pivot.y;
  return e;
}

Extents extents(const GridDrawing& d) { return extents_of(d.positions(), d.root_pos()); }

BoundingBox bounding_box(const GridDrawing& d, NodeId subtree_root) {
  if (subtree_root < 0 || subtree_root >= d.size()) {
    throw std::invalid_argument("bounding_box: node out of range");
  }
  const Point r = d.pos(subtree_root);
  BoundingBox box{r.x, r.x, r.y, r.y};
  // Internal edges run between subtree nodes, so the node hull is the edge hull.
  const NodeId end = subtree_root + d.tree().subtree_size(subtree_root);
  for (NodeId v = subtree_root; v < end; ++v) box.include(d.pos(v));
  return box;
}

std::vector<BoundingBox> subtree_boxes(const GridDrawing& d) {
  const TernaryTree& t = d.tree();
  std::vector<BoundingBox> boxes(t.size());
  for (NodeId v = 0; v < t.size(); ++v) {
    const Point p = d.pos(v);
    boxes[v] = {p.x, p.x, p.y, p.y};
  }
  for (NodeId v = t.size() - 1; v > 0; --v) boxes[*t.parent(v)].include(boxes[v]);
  return boxes;
}

}  // namespace terngrid
