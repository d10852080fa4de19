#include "terngrid/layout_complete.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace terngrid {

OneTwoDrawing::OneTwoDrawing(GridDrawing d, int h)
    : drawing_(std::move(d)), extents_(terngrid::extents(drawing_)), h_(h) {}

OneTwoDrawing OneTwoDrawing::point() { return OneTwoDrawing(GridDrawing::point(), 1); }

std::shared_ptr<const TernaryTree> shared_complete_tree(int h) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const TernaryTree>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[h];
  if (!slot) slot = std::make_shared<const TernaryTree>(complete_tree(h));
  return slot;
}

namespace {

// Copies `part` into `out`, rotating about its root, and placing its root at `at`.
void place(std::vector<Point>& out, NodeId offset, const GridDrawing& part, int quarter_turns_cw,
           Point at) {
  const Point r = part.root_pos();
  for (NodeId v = 0; v < part.size(); ++v) {
    const Point p = rotate_point(part.pos(v), r, quarter_turns_cw);
    out[offset + v] = {at.x + (p.x - r.x), at.y + (p.y - r.y)};
  }
}

// Extents after rotating a drawing by quarter turns about its root.
Extents rotated_extents(const Extents& e, int quarter_turns_cw) {
  Extents r = e;
  const int q = ((quarter_turns_cw % 4) + 4) % 4;
  for (int i = 0; i < q; ++i) {
    // Clockwise: top -> right -> bottom -> left -> top.
    r = Extents{r.height, r.width, r.bottom, r.top, r.left, r.right};
  }
  return r;
}

}  // namespace

OneTwoDrawing assemble(Construction kind, const OneTwoDrawing& center, const OneTwoDrawing& left,
                       const OneTwoDrawing& right, std::shared_ptr<const TernaryTree> root_tree) {
  const int sub_h = center.height_index();
  if (left.height_index() != sub_h || right.height_index() != sub_h) {
    throw std::invalid_argument("1-2 construction: sub-drawings must draw the same T_{h-1}");
  }
  if (!root_tree) {
    root_tree = shared_complete_tree(sub_h + 1);
  }
  const TernaryTree& t = *root_tree;
  if (t.child_count(0) != 3) throw std::invalid_argument("1-2 construction: root needs three children");
  const auto kids = t.children(0);
  if (!t.subtree_matches(kids[0], left.drawing().tree()) ||
      !t.subtree_matches(kids[1], center.drawing().tree()) ||
      !t.subtree_matches(kids[2], right.drawing().tree()) || t.size() != 1 + 3 * center.drawing().size()) {
    throw std::invalid_argument("1-2 construction: sub-drawing does not match root_tree's subtrees");
  }

  const Extents& ea = center.extents();
  const Extents eb = rotated_extents(left.extents(), 1);
  const Extents ec = rotated_extents(right.extents(), 3);

  Point at_a, at_b, at_c;
  if (kind == Construction::kOne) {
    at_a = {0, 1 + ea.top};
    at_b = {-ea.left - 1 - eb.right, 0};
    at_c = {ea.right + 1 + ec.left, 0};
  } else {
    at_b = {-1 - eb.right, 0};
    at_c = {1 + ec.left, 0};
    at_a = {0, 1 + std::max(eb.bottom, ec.bottom) + ea.top};
  }

  std::vector<Point> pos(t.size());
  pos[0] = {0, 0};
  place(pos, kids[0], left.drawing(), 1, at_b);
  place(pos, kids[1], center.drawing(), 0, at_a);
  place(pos, kids[2], right.drawing(), 3, at_c);
  return OneTwoDrawing(GridDrawing(std::move(root_tree), std::move(pos)), sub_h + 1);
}

OneTwoDrawing combine(Construction c, const OneTwoDrawing& center, const OneTwoDrawing& left,
                      const OneTwoDrawing& right, std::shared_ptr<const TernaryTree> root_tree) {
  return assemble(c, center, left, right, std::move(root_tree));
}

OneTwoDrawing construction1(const OneTwoDrawing& center, const OneTwoDrawing& left,
                            const OneTwoDrawing& right, std::shared_ptr<const TernaryTree> root_tree) {
  return assemble(Construction::kOne, center, left, right, std::move(root_tree));
}

OneTwoDrawing construction2(const OneTwoDrawing& center, const OneTwoDrawing& left,
                            const OneTwoDrawing& right, std::shared_ptr<const TernaryTree> root_tree) {
  return assemble(Construction::kTwo, center, left, right, std::move(root_tree));
}

Extents construction1_extents(const Extents& a, const Extents& b, const Extents& c) {
  Extents e;
  e.left = a.left + b.height;
  e.right = a.right + c.height;
  e.top = std::max(b.left, c.right);
  e.bottom = std::max({b.right, a.height, c.left});
  e.width = a.width + b.height + c.height;
  e.height = e.top + e.bottom + 1;
  return e;
}

Extents construction2_extents(const Extents& a, const Extents& b, const Extents& c) {
  Extents e;
  e.left = std::max(a.left, b.height);
  e.right = std::max(a.right, c.height);
  e.top = std::max(b.left, c.right);
  e.bottom = std::max(b.right, c.left) + a.height;
  e.width = e.left + e.right + 1;
  e.height = e.top + e.bottom + 1;
  return e;
}

namespace {

void require_h(int h, const char* who) {
  if (h < 1) throw std::invalid_argument(std::string(who) + ": h must be >= 1");
}

}  // namespace

OneTwoDrawing draw_c1_only(int h) {
  require_h(h, "draw_c1_only");
  OneTwoDrawing g = OneTwoDrawing::point();
  for (int k = 2; k <= h; ++k) g = construction1(g, g, g);
  return g;
}

OneTwoDrawing draw_c2_only(int h) {
  require_h(h, "draw_c2_only");
  OneTwoDrawing g = OneTwoDrawing::point();
  for (int k = 2; k <= h; ++k) g = construction2(g, g, g);
  return g;
}

std::pair<OneTwoDrawing, OneTwoDrawing> draw_golden(int h) {
  require_h(h, "draw_golden");
  OneTwoDrawing g1 = OneTwoDrawing::point();
  if (h >= 2) g1 = construction1(g1, g1, g1);
  OneTwoDrawing g2 = g1;
  for (int k = 3; k <= h; ++k) {
    OneTwoDrawing next1 = construction1(g1, g2, g2);
    OneTwoDrawing next2 = construction2(g2, g1, g1);
    g1 = std::move(next1);
    g2 = std::move(next2);
  }
  return {std::move(g1), std::move(g2)};
}

OneTwoDrawing draw_upper_1149(int h) {
  require_h(h, "draw_upper_1149");
  OneTwoDrawing prev2 = OneTwoDrawing::point();
  if (h == 1) return prev2;
  OneTwoDrawing prev1 = construction1(prev2, prev2, prev2);
  for (int k = 3; k <= h; ++k) {
    const OneTwoDrawing center = construction1(prev2, prev2, prev2);
    OneTwoDrawing cur = construction2(center, prev1, prev1);
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

namespace {

const Extents kPoint{1, 1, 0, 0, 0, 0};

}  // namespace

Extents c1_only_extents(int h) {
  require_h(h, "c1_only_extents");
  Extents e = kPoint;
  for (int k = 2; k <= h; ++k) e = construction1_extents(e, e, e);
  return e;
}

Extents c2_only_extents(int h) {
  require_h(h, "c2_only_extents");
  Extents e = kPoint;
  for (int k = 2; k <= h; ++k) e = construction2_extents(e, e, e);
  return e;
}

std::pair<Extents, Extents> golden_extents(int h) {
  require_h(h, "golden_extents");
  Extents g1 = kPoint;
  if (h >= 2) g1 = construction1_extents(g1, g1, g1);
  Extents g2 = g1;
  for (int k = 3; k <= h; ++k) {
    const Extents n1 = construction1_extents(g1, g2, g2);
    const Extents n2 = construction2_extents(g2, g1, g1);
    g1 = n1;
    g2 = n2;
  }
  return {g1, g2};
}

Extents upper_1149_extents(int h) {
  require_h(h, "upper_1149_extents");
  // (width, height) pairs following the width/height recurrences directly.
  Coord w2 = 1, h2 = 1;  // level k-2
  Coord w1 = 3, h1 = 2;  // level k-1
  if (h == 1) return kPoint;
  for (int k = 3; k <= h; ++k) {
    if (w2 % 2 == 0) throw std::logic_error("upper_1149_extents: even width " + std::to_string(w2));
    const Coord w = std::max(2 * h1 + 1, w2 + 2 * h2);
    const Coord ht = w1 + std::max(w2, (w2 + 1) / 2 + h2);
    w2 = w1;
    h2 = h1;
    w1 = w;
    h1 = ht;
  }
  if (w1 % 2 == 0) throw std::logic_error("upper_1149_extents: even width " + std::to_string(w1));
  // Left and right widths are equal; the root sits on a row whose top part
  // is the arms' half width.
  Extents e;
  e.width = w1;
  e.height = h1;
  e.left = e.right = (w1 - 1) / 2;
  e.top = (w2 - 1) / 2;  // arms Gamma_{h-1} rotated: their half width above the root row
  e.bottom = h1 - 1 - e.top;
  return e;
}

}  // namespace terngrid
