#include "terngrid/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

namespace terngrid {

namespace {

Point unit_direction(Point from, Point to) {
  auto sign = [](Coord c) -> Coord { return (c > 0) - (c < 0); };
  return {sign(to.x - from.x), sign(to.y - from.y)};
}

// Screen rotations of a unit direction, y down.
Point turn_cw(Point d) { return {-d.y, d.x}; }
Point turn_ccw(Point d) { return {d.y, -d.x}; }

// Collinear overlap among segments on one line: after sorting by (line,
// start), a start strictly before the running maximum end is an overlap.
// Touching means a shared node (positions are distinct), which is allowed.
bool collinear_overlap(std::vector<Segment>& segs, bool by_row) {
  auto line = [&](const Segment& s) { return by_row ? s.a.y : s.a.x; };
  auto lo = [&](const Segment& s) { return by_row ? s.a.x : s.a.y; };
  auto hi = [&](const Segment& s) { return by_row ? s.b.x : s.b.y; };
  std::sort(segs.begin(), segs.end(), [&](const Segment& s, const Segment& t) {
    return std::pair{line(s), lo(s)} < std::pair{line(t), lo(t)};
  });
  Coord run = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i > 0 && line(segs[i]) == line(segs[i - 1])) {
      if (lo(segs[i]) < run) return true;
      run = std::max(run, hi(segs[i]));
    } else {
      run = hi(segs[i]);
    }
  }
  return false;
}

// Is `p` strictly inside a segment of `segs` (sorted by (line, start), no
// overlaps)?
bool inside_some(const std::vector<Segment>& segs, Point p, bool by_row) {
  const Coord line = by_row ? p.y : p.x;
  const Coord along = by_row ? p.x : p.y;
  auto key = [&](const Segment& s) {
    return by_row ? std::pair{s.a.y, s.a.x} : std::pair{s.a.x, s.a.y};
  };
  auto it = std::lower_bound(segs.begin(), segs.end(), std::pair{line, along},
                             [&](const Segment& s, const std::pair<Coord, Coord>& k) { return key(s) < k; });
  if (it == segs.begin()) return false;
  --it;
  const auto [l, s] = key(*it);
  const Coord e = by_row ? it->b.x : it->b.y;
  return l == line && s < along && along < e;
}

}  // namespace

std::vector<Segment> edge_segments(const GridDrawing& d) {
  const TernaryTree& t = d.tree();
  std::vector<Segment> segs;
  segs.reserve(t.size() > 0 ? t.size() - 1 : 0);
  for (NodeId v = 1; v < t.size(); ++v) {
    const NodeId p = *t.parent(v);
    Point a = d.pos(p), b = d.pos(v);
    if (b < a) std::swap(a, b);
    segs.push_back({p, v, a, b});
  }
  return segs;
}

bool check_distinct_positions(const GridDrawing& d) {
  std::vector<Point> pts(d.positions().begin(), d.positions().end());
  std::sort(pts.begin(), pts.end());
  return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

bool check_axis_parallel(const GridDrawing& d) {
  const TernaryTree& t = d.tree();
  for (NodeId v = 1; v < t.size(); ++v) {
    const Point a = d.pos(*t.parent(v)), b = d.pos(v);
    const bool h = a.y == b.y, vert = a.x == b.x;
    if (h == vert) return false;  // diagonal, or zero length
  }
  return true;
}

bool check_orthogonal_grid(const GridDrawing& d) {
  return check_axis_parallel(d) && check_distinct_positions(d);
}

bool check_planar(const GridDrawing& d) {
  if (!check_orthogonal_grid(d)) throw std::invalid_argument("check_planar: drawing is not orthogonal");

  std::vector<Segment> hs, vs;
  for (const Segment& s : edge_segments(d)) (s.horizontal() ? hs : vs).push_back(s);

  if (collinear_overlap(hs, true)) return false;
  if (collinear_overlap(vs, false)) return false;

  // A node inside an edge covers every T-junction and every non-incident
  // node-on-edge case.
  for (Point p : d.positions()) {
    if (inside_some(hs, p, true) || inside_some(vs, p, false)) return false;
  }

  // Interior-interior crossings: sweep x; horizontals active on open (x1, x2).
  enum Kind { kRemove = 0, kQuery = 1, kInsert = 2 };
  struct Event {
    Coord x;
    Kind kind;
    const Segment* seg;
  };
  std::vector<Event> events;
  events.reserve(2 * hs.size() + vs.size());
  for (const Segment& s : hs) {
    events.push_back({s.a.x, kInsert, &s});
    events.push_back({s.b.x, kRemove, &s});
  }
  for (const Segment& s : vs) events.push_back({s.a.x, kQuery, &s});
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return std::tie(a.x, a.kind) < std::tie(b.x, b.kind); });
  std::multiset<Coord> active;
  for (const Event& e : events) {
    switch (e.kind) {
      case kInsert:
        active.insert(e.seg->a.y);
        break;
      case kRemove:
        active.erase(active.find(e.seg->a.y));
        break;
      case kQuery: {
        auto it = active.upper_bound(e.seg->a.y);
        if (it != active.end() && *it < e.seg->b.y) return false;
        break;
      }
    }
  }
  return true;
}

bool check_top_visibility(const GridDrawing& d) {
  const Point r = d.root_pos();
  for (Point p : d.positions()) {
    if (p.x == r.x && p.y < r.y) return false;
  }
  for (const Segment& s : edge_segments(d)) {
    if (s.horizontal()) {
      if (s.a.y < r.y && s.a.x <= r.x && r.x <= s.b.x) return false;
    } else if (s.a.x == r.x && s.a.y < r.y) {
      return false;
    }
  }
  return true;
}

bool check_subtree_separation(const GridDrawing& d) {
  const auto boxes = subtree_boxes(d);
  const TernaryTree& t = d.tree();
  for (NodeId v = 0; v < t.size(); ++v) {
    const auto kids = t.children(v);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        if (boxes[kids[i]].intersects(boxes[kids[j]])) return false;
      }
    }
  }
  return true;
}

namespace {

// Follows the straight chain root -> first -> ... in direction `dir`.
// Returns (nodes on chain including the root, grid lines spanned).
std::pair<int, Coord> straight_chain(const GridDrawing& d, NodeId first, Point dir) {
  const TernaryTree& t = d.tree();
  const Point r = d.root_pos();
  NodeId cur = first;
  int nodes = 2;
  while (!t.is_leaf(cur)) {
    NodeId next = kNoNode;
    for (NodeId c : t.children(cur)) {
      if (unit_direction(d.pos(cur), d.pos(c)) == dir) {
        if (next != kNoNode) throw VerificationFailure("two children continue the same chain");
        next = c;
      }
    }
    if (next == kNoNode) throw VerificationFailure("chain does not continue straight to a leaf");
    cur = next;
    ++nodes;
  }
  const Point end = d.pos(cur);
  const Coord span = std::max(std::abs(end.x - r.x), std::abs(end.y - r.y));
  return {nodes, span + 1};
}

}  // namespace

LegArms leg_arm_lengths(const GridDrawing& d) {
  const TernaryTree& t = d.tree();
  int h = 0;
  if (!t.is_complete(&h)) throw VerificationFailure("leg_arm_lengths: tree is not complete");
  if (h == 1) return {1, 1, 1};
  if (!check_orthogonal_grid(d)) throw VerificationFailure("leg_arm_lengths: drawing is not orthogonal");

  const Point r = d.root_pos();
  std::array<Point, 3> dirs;
  for (int s = 0; s < 3; ++s) dirs[s] = unit_direction(r, d.pos(t.children(0)[s]));
  int leg = -1;
  for (int s = 0; s < 3; ++s) {
    const Point o = dirs[(s + 1) % 3], w = dirs[(s + 2) % 3];
    if (o.x == -w.x && o.y == -w.y && dirs[s] != o && dirs[s] != w) {
      if (leg != -1) throw VerificationFailure("ambiguous leg");
      leg = s;
    }
  }
  if (leg == -1) throw VerificationFailure("root children are not arranged as leg and two arms");

  const Point leg_dir = dirs[leg];
  LegArms out;
  for (int s = 0; s < 3; ++s) {
    const auto [nodes, len] = straight_chain(d, t.children(0)[s], dirs[s]);
    if (nodes != h) throw VerificationFailure("chain length differs from tree height");
    if (s == leg) {
      out.leg = len;
    } else if (dirs[s] == turn_cw(leg_dir)) {
      out.left_arm = len;
    } else if (dirs[s] == turn_ccw(leg_dir)) {
      out.right_arm = len;
    }
  }
  return out;
}

std::uint64_t fib_lower_bound(int h) {
  if (h < 1) throw std::invalid_argument("fib_lower_bound: h must be >= 1");
  std::uint64_t a = 1, b = 2;
  if (h == 1) return a;
  for (int i = 3; i <= h; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

VerificationReport verify(const GridDrawing& d) {
  VerificationReport rep;
  rep.on_grid = check_distinct_positions(d);
  rep.orthogonal = check_axis_parallel(d);
  rep.planar = rep.on_grid && rep.orthogonal && check_planar(d);
  rep.top_visible = check_top_visibility(d);
  rep.subtree_separated = check_subtree_separation(d);
  rep.extents = extents(d);
  if (rep.planar && d.tree().is_complete()) {
    try {
      rep.legs = leg_arm_lengths(d);
    } catch (const VerificationFailure&) {
      rep.legs.reset();
    }
  }
  return rep;
}

}  // namespace terngrid
