#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "terngrid/geometry.hpp"

namespace terngrid {

struct LayoutParams {
  /// Threshold divisor: a subtree counts as big when it has >= n/p nodes.
  double p = 9.956;

  /// Height exponent c = 1 / log2(3p / (p - 1)).
  double exponent() const;
};

/// One off-rail subtree hung above (`top`, rotated 180 degrees) or below its
/// rail parent.
struct Attachment {
  NodeId parent = kNoNode;
  NodeId child = kNoNode;
  bool top = false;
  bool on_p = false;  // parent lies on rail P (otherwise Q)
};

/// How one subtree is split over the two horizontal rails.
///
/// P = (rho reversed, pi_1..pi_{x-1}, sigma), Q = (pi reversed down to pi_x,
/// tau). Paths are heavy paths: pi from the subtree root, rho from M(pi_1),
/// sigma from M(pi_{x-1}), tau from M(pi_x). With x = 2, rho starts at
/// M(pi_1) and sigma at L(pi_1).
struct RailDecomposition {
  NodeId subtree_root = 0;
  NodeId n = 1;
  std::optional<int> x;  // 1-based turn index on pi
  std::vector<NodeId> pi, rho, sigma, tau;
  std::vector<NodeId> P, Q;
  std::vector<Attachment> attachments;
};

/// Largest attachment sizes: a/b = top/bottom subtrees of P, r/s = top/bottom
/// subtrees of Q. a and b are reported only when x >= 3.
struct DecompositionStats {
  std::optional<NodeId> a, b;
  NodeId r = 0, s = 0;
};

/// Checks a, b < n/p; s <= (n-a-b)/3; r + s <= 2(p-1)n/(3p).
/// Vacuously true when a/b are absent.
bool stats_within_bounds(const DecompositionStats& st, NodeId n, const LayoutParams& params);

RailDecomposition decompose(const TernaryTree& t, const LayoutParams& params, NodeId subtree_root = 0);

DecompositionStats decomposition_stats(const RailDecomposition& d, const TernaryTree& t);

using DecompositionObserver = std::function<void(const RailDecomposition&)>;

/// Planar orthogonal grid drawing of any ternary tree with top-visibility,
/// width <= n and height <= 2 n^c - 1. `observer`, if set, sees the
/// decomposition of every recursive subproblem with at least two nodes.
GridDrawing draw_general(std::shared_ptr<const TernaryTree> t, const LayoutParams& params = {},
                         const DecompositionObserver& observer = {});
GridDrawing draw_general(const TernaryTree& t, const LayoutParams& params = {},
                         const DecompositionObserver& observer = {});

}  // namespace terngrid
