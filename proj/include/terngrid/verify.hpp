#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "terngrid/geometry.hpp"

namespace terngrid {

/// Raised when a drawing lacks a structure the measurement relies on.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Axis-parallel segment for one tree edge, endpoints ordered (a <= b).
struct Segment {
  NodeId u = kNoNode, v = kNoNode;
  Point a, b;
  bool horizontal() const { return a.y == b.y; }
};

/// Edge segments of `d`, one per tree edge.
std::vector<Segment> edge_segments(const GridDrawing& d);

/// Distinct positions and every edge axis-parallel with positive length.
bool check_orthogonal_grid(const GridDrawing& d);
bool check_distinct_positions(const GridDrawing& d);
bool check_axis_parallel(const GridDrawing& d);

/// No two edges share a point other than a common endpoint, and no node
/// sits inside a non-incident edge. Sort-and-sweep, O(m log m).
/// Throws std::invalid_argument when `d` fails check_orthogonal_grid.
bool check_planar(const GridDrawing& d);

/// The upward ray from the root meets the drawing only at the root.
bool check_top_visibility(const GridDrawing& d);

/// For every node the closed bounding boxes of its child subtrees are
/// pairwise disjoint. Equivalent to pairwise disjointness over all
/// node-disjoint subtrees, since those nest in distinct children of their LCA.
bool check_subtree_separation(const GridDrawing& d);

struct LegArms {
  Coord leg = 1;
  Coord left_arm = 1;
  Coord right_arm = 1;

  Coord min() const { return std::min(leg, std::min(left_arm, right_arm)); }
  friend bool operator==(const LegArms&, const LegArms&) = default;
};

/// Leg and arms of a drawing of a complete ternary tree: the three collinear
/// root-to-leaf chains. The leg is the chain whose line carries no other root
/// child; left arm, leg, right arm run counterclockwise around the root.
/// Lengths count grid lines (coordinate span + 1).
/// Throws VerificationFailure when the chains cannot be identified uniquely.
LegArms leg_arm_lengths(const GridDrawing& d);

/// f(1)=1, f(2)=2, f(h)=f(h-1)+f(h-2).
std::uint64_t fib_lower_bound(int h);

struct VerificationReport {
  bool planar = false;
  bool orthogonal = false;
  bool on_grid = false;
  bool top_visible = false;
  bool subtree_separated = false;
  Extents extents;
  std::optional<LegArms> legs;  // complete trees only

  /// planar, orthogonal, on the grid.
  bool valid() const { return planar && orthogonal && on_grid; }
};

VerificationReport verify(const GridDrawing& d);

}  // namespace terngrid
