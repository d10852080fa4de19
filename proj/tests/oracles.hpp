#pragma once

// Brute-force reference checks and random drawing generators shared by the
// unit tests and the acceptance runner.

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "terngrid/layout_general.hpp"
#include "terngrid/verify.hpp"

namespace terngrid::oracle {

// Intersection of two closed axis-parallel segments: empty, one point, or a
// collinear run. Returns the number of common points capped at 2, and the
// point when there is exactly one.
inline int common_points(const Segment& s, const Segment& t, Point& where) {
  const Coord x_lo = std::max(s.a.x, t.a.x), x_hi = std::min(s.b.x, t.b.x);
  const Coord y_lo = std::max(s.a.y, t.a.y), y_hi = std::min(s.b.y, t.b.y);
  if (x_lo > x_hi || y_lo > y_hi) return 0;
  if (x_lo == x_hi && y_lo == y_hi) {
    where = {x_lo, y_lo};
    return 1;
  }
  return 2;
}

// O(m^2): any two edges may meet only in one point, which must be a node
// both edges share. A node inside a foreign edge shows up as that edge
// meeting one of the node's own edges away from a shared endpoint.
inline bool naive_planar(const GridDrawing& d) {
  const std::vector<Segment> segs = edge_segments(d);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      Point p;
      const int k = common_points(segs[i], segs[j], p);
      if (k == 0) continue;
      if (k == 2) return false;
      NodeId shared = kNoNode;
      for (NodeId u : {segs[i].u, segs[i].v}) {
        if (u == segs[j].u || u == segs[j].v) shared = u;
      }
      if (shared == kNoNode || d.pos(shared) != p) return false;
    }
  }
  return true;
}

// Pairwise over every two node-disjoint subtrees.
inline bool naive_subtree_separation(const GridDrawing& d) {
  const TernaryTree& t = d.tree();
  std::vector<BoundingBox> boxes;
  for (NodeId v = 0; v < t.size(); ++v) boxes.push_back(bounding_box(d, v));
  for (NodeId v = 0; v < t.size(); ++v) {
    for (NodeId w = v + 1; w < t.size(); ++w) {
      if (t.is_ancestor(v, w)) continue;
      if (boxes[v].intersects(boxes[w])) return false;
    }
  }
  return true;
}

inline const Point kDirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Random orthogonal placement of a random tree: every child goes 1..3 steps
// from its parent in a random free direction. Crossings and overlaps are
// frequent, positions stay distinct.
inline GridDrawing random_walk_drawing(NodeId n, std::mt19937_64& rng) {
  auto t = std::make_shared<const TernaryTree>(random_ternary_tree(n, rng()));
  std::vector<Point> pos(t->size());
  std::set<Point> used{{0, 0}};
  auto taken = [&](Point p) { return used.count(p) > 0; };
  std::uniform_int_distribution<int> dir(0, 3), len(1, 3);
  for (NodeId v = 1; v < t->size(); ++v) {
    const Point base = pos[*t->parent(v)];
    Point p;
    int tries = 0;
    do {
      const Point dv = kDirs[dir(rng)];
      const Coord l = tries < 20 ? len(rng) : 4 + tries;
      p = {base.x + dv.x * l, base.y + dv.y * l};
      ++tries;
    } while (taken(p));
    pos[v] = p;
    used.insert(p);
  }
  return GridDrawing(std::move(t), std::move(pos));
}

// A valid layout with one leaf moved along a random axis away from its
// parent, which often drives its edge through other parts of the drawing.
inline GridDrawing perturbed_general_drawing(NodeId n, std::mt19937_64& rng) {
  auto t = std::make_shared<const TernaryTree>(random_ternary_tree(n, rng()));
  GridDrawing d = draw_general(t);
  if (t->size() < 2) return d;
  std::vector<Point> pos(d.positions().begin(), d.positions().end());
  std::vector<NodeId> leaves;
  for (NodeId v = 1; v < t->size(); ++v) {
    if (t->is_leaf(v)) leaves.push_back(v);
  }
  const NodeId leaf = leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
  const Point base = pos[*t->parent(leaf)];
  std::vector<Point> sorted(pos);
  std::sort(sorted.begin(), sorted.end());
  for (int attempt = 0; attempt < 50; ++attempt) {
    const Point dv = kDirs[std::uniform_int_distribution<int>(0, 3)(rng)];
    const Coord l = std::uniform_int_distribution<Coord>(1, 40)(rng);
    const Point p{base.x + dv.x * l, base.y + dv.y * l};
    if (!std::binary_search(sorted.begin(), sorted.end(), p)) {
      pos[leaf] = p;
      break;
    }
  }
  return GridDrawing(std::move(t), std::move(pos));
}

}  // namespace terngrid::oracle
