#include "doctest.h"
#include "terngrid/layout_general.hpp"
#include "terngrid/verify.hpp"

#include <cmath>

using namespace terngrid;

namespace {

// Appends a chain of `len` nodes under `parent`.
void chain(std::vector<std::vector<NodeId>>& ch, NodeId parent, NodeId len) {
  for (NodeId i = 0; i < len; ++i) {
    const NodeId id = static_cast<NodeId>(ch.size());
    ch.emplace_back();
    ch[parent].push_back(id);
    parent = id;
  }
}

Coord height_bound(NodeId n) {
  return std::max<Coord>(1, static_cast<Coord>(std::ceil(2.0 * std::pow(static_cast<double>(n), 0.576) - 1.0)));
}

void check_layout(const TernaryTree& t) {
  const GridDrawing d = draw_general(t);
  CHECK(check_orthogonal_grid(d));
  CHECK(check_planar(d));
  CHECK(check_top_visibility(d));
  const Extents e = extents(d);
  CHECK(e.width <= t.size());
  CHECK(e.height <= height_bound(t.size()));
}

}  // namespace

TEST_CASE("exponent") {
  const LayoutParams p;
  CHECK(p.exponent() > 0.5);
  CHECK(p.exponent() < 0.576);
  CHECK(p.exponent() == doctest::Approx(0.5755).epsilon(1e-3));
}

TEST_CASE("decomposition of a path") {
  const TernaryTree t = path_tree(12);
  const RailDecomposition d = decompose(t, {});
  CHECK_FALSE(d.x.has_value());
  CHECK(d.Q.empty());
  CHECK(d.P.size() == 12);
  const DecompositionStats st = decomposition_stats(d, t);
  CHECK(st.r == 0);
  CHECK(st.s == 0);
  CHECK_FALSE(st.a.has_value());
  CHECK_THROWS_AS(decompose(path_tree(1), {}), std::invalid_argument);
}

TEST_CASE("turn index") {
  CHECK(decompose(complete_tree(4), {}).x == 1);
  // Root subtrees (30, 3, 2); the 30-node child splits as (10, 10, 9).
  std::vector<std::vector<NodeId>> ch(1);
  chain(ch, 0, 1);
  const NodeId big = ch[0][0];
  chain(ch, big, 10);
  chain(ch, big, 10);
  chain(ch, big, 9);
  chain(ch, 0, 3);
  chain(ch, 0, 2);
  const TernaryTree t = TernaryTree::canonicalize(0, ch);
  REQUIRE(t.size() == 36);
  const RailDecomposition d = decompose(t, {});
  CHECK(d.x == 2);
  // Every rail node appears once, and P/Q plus attachments cover the tree.
  NodeId covered = static_cast<NodeId>(d.P.size() + d.Q.size());
  for (const Attachment& a : d.attachments) covered += t.subtree_size(a.child);
  CHECK(covered == t.size());
  check_layout(t);
}

TEST_CASE("decomposition inequalities") {
  auto sweep = [](const TernaryTree& t) {
    int general = 0;
    draw_general(t, {}, [&](const RailDecomposition& d) {
      const DecompositionStats st = decomposition_stats(d, t);
      if (d.x && *d.x >= 3) {
        ++general;
        CHECK(stats_within_bounds(st, d.n, {}));
      }
    });
    return general;
  };
  sweep(complete_tree(5));
  int general = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) general += sweep(random_ternary_tree(500, seed));
  CHECK(general > 0);
}

TEST_CASE("small cases") {
  const GridDrawing one = draw_general(path_tree(1));
  CHECK(extents(one) == Extents{});
  const Extents p = extents(draw_general(path_tree(50)));
  CHECK(p.width == 50);
  CHECK(p.height == 1);
  const Extents c3 = extents(draw_general(complete_tree(3)));
  CHECK(c3.height <= 7);
  const TernaryTree r = random_ternary_tree(1000, 42);
  CHECK(extents(draw_general(r)).width <= 1000);
}

TEST_CASE("layout bounds over varied trees") {
  for (int h = 1; h <= 7; ++h) check_layout(complete_tree(h));
  for (NodeId n : {2, 3, 7, 100}) check_layout(path_tree(n));
  for (int legs = 0; legs <= 2; ++legs) check_layout(caterpillar_tree(200, legs));
  for (std::uint64_t seed = 0; seed < 60; ++seed) check_layout(random_ternary_tree(static_cast<NodeId>(2 + seed * 37), seed));
}

TEST_CASE("layout is deterministic") {
  const TernaryTree t = random_ternary_tree(5000, 9);
  CHECK(draw_general(t) == draw_general(t));
}

TEST_CASE("rejects p <= 4") {
  CHECK_THROWS_AS(draw_general(path_tree(3), LayoutParams{4.0}), std::invalid_argument);
}
