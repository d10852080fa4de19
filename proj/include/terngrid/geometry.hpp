#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "terngrid/tree.hpp"

namespace terngrid {

using Coord = std::int64_t;

/// Grid point. y grows downward, x grows rightward.
struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct BoundingBox {
  Coord xmin = 0, xmax = 0, ymin = 0, ymax = 0;

  Coord width() const { return xmax - xmin + 1; }
  Coord height() const { return ymax - ymin + 1; }
  void include(Point p);
  void include(const BoundingBox& b);
  /// Closed-rectangle intersection test.
  bool intersects(const BoundingBox& b) const {
    return xmin <= b.xmax && b.xmin <= xmax && ymin <= b.ymax && b.ymin <= ymax;
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// Grid lines spanned by a drawing, counted relative to the root:
/// width = left + right + 1, height = top + bottom + 1.
struct Extents {
  Coord width = 1, height = 1;
  Coord left = 0, right = 0;
  Coord top = 0, bottom = 0;

  Coord area() const { return width * height; }
  friend bool operator==(const Extents&, const Extents&) = default;
};

/// Node positions for a tree; edges are implied by the tree.
class GridDrawing {
 public:
  GridDrawing(std::shared_ptr<const TernaryTree> tree, std::vector<Point> pos);

  /// The one-node drawing at the origin.
  static GridDrawing point();

  const TernaryTree& tree() const { return *tree_; }
  const std::shared_ptr<const TernaryTree>& tree_ptr() const { return tree_; }
  std::span<const Point> positions() const { return pos_; }
  Point pos(NodeId v) const { return pos_[v]; }
  Point root_pos() const { return pos_[0]; }
  NodeId size() const { return tree_->size(); }

  friend bool operator==(const GridDrawing& a, const GridDrawing& b) {
    return a.pos_ == b.pos_ && *a.tree_ == *b.tree_;
  }

 private:
  std::shared_ptr<const TernaryTree> tree_;
  std::vector<Point> pos_;
};

GridDrawing translate(const GridDrawing& d, Coord dx, Coord dy);

/// Rigid rotation about the root by `quarter_turns_cw` clockwise quarter turns
/// (as seen on screen, y down). Any integer is accepted and reduced mod 4.
GridDrawing rotate(const GridDrawing& d, int quarter_turns_cw);

/// Rotates `p` about `pivot` by clockwise quarter turns.
Point rotate_point(Point p, Point pivot, int quarter_turns_cw);

Extents extents(const GridDrawing& d);

/// Extents of an arbitrary point set measured against `pivot`.
Extents extents_of(std::span<const Point> pts, Point pivot);

BoundingBox bounding_box(const GridDrawing& d, NodeId subtree_root);

/// Boxes of every subtree, computed in one bottom-up pass.
std::vector<BoundingBox> subtree_boxes(const GridDrawing& d);

}  // namespace terngrid
