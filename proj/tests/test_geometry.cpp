#include "doctest.h"
#include "terngrid/geometry.hpp"
#include "terngrid/layout_complete.hpp"

using namespace terngrid;

namespace {

GridDrawing t2() { return draw_c1_only(2).drawing(); }

}  // namespace

TEST_CASE("translate") {
  const GridDrawing d = draw_c2_only(3).drawing();
  CHECK(translate(d, 0, 0) == d);
  const GridDrawing p = translate(GridDrawing::point(), 3, -2);
  CHECK(p.root_pos() == Point{3, -2});
  CHECK(extents(translate(d, 17, -5)) == extents(d));
}

TEST_CASE("rotate") {
  const GridDrawing d = draw_c2_only(4).drawing();
  CHECK(rotate(rotate(d, 2), 2) == d);
  CHECK(rotate(rotate(rotate(rotate(d, 1), 1), 1), 1) == d);
  CHECK(rotate(d, 5) == rotate(d, 1));
  CHECK(rotate(d, -1) == rotate(d, 3));
  CHECK(rotate(GridDrawing::point(), 1) == GridDrawing::point());

  const Extents e = extents(rotate(t2(), 1));
  CHECK(e == Extents{2, 3, 1, 0, 1, 1});
  const Extents r = extents(rotate(d, 1));
  CHECK(r.width == extents(d).height);
  CHECK(r.height == extents(d).width);
  CHECK(rotate_point({1, 0}, {0, 0}, 1) == Point{0, 1});  // right turns to down on screen
}

TEST_CASE("extents") {
  CHECK(extents(GridDrawing::point()) == Extents{1, 1, 0, 0, 0, 0});
  CHECK(extents(t2()) == Extents{3, 2, 1, 1, 0, 1});
  auto line = std::make_shared<const TernaryTree>(TernaryTree::from_children({{1, 2}, {}, {}}));
  const GridDrawing l(line, {{0, 0}, {-1, 0}, {1, 0}});
  CHECK(extents(l) == Extents{3, 1, 1, 1, 0, 0});
}

TEST_CASE("bounding boxes") {
  const GridDrawing d = t2();
  const BoundingBox leaf = bounding_box(d, 1);
  CHECK(leaf.width() == 1);
  CHECK(leaf.height() == 1);
  const BoundingBox all = bounding_box(d, 0);
  CHECK(all.width() == 3);
  CHECK(all.height() == 2);
  const GridDrawing big = draw_upper_1149(5).drawing();
  const auto boxes = subtree_boxes(big);
  for (NodeId v = 0; v < big.size(); v += 7) CHECK(boxes[v] == bounding_box(big, v));
  CHECK(boxes[0].width() == extents(big).width);
  CHECK(boxes[0].height() == extents(big).height);
}

TEST_CASE("occupied columns never exceed node count") {
  for (int h = 1; h <= 6; ++h) {
    for (const GridDrawing& d : {draw_c1_only(h).drawing(), draw_c2_only(h).drawing(),
                                 draw_upper_1149(h).drawing()}) {
      CHECK(extents(d).width <= d.size());
    }
  }
}
