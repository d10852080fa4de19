#include "terngrid/layout_general.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace terngrid {

double LayoutParams::exponent() const { return 1.0 / std::log2(3.0 * p / (p - 1.0)); }

bool stats_within_bounds(const DecompositionStats& st, NodeId n, const LayoutParams& params) {
  if (!st.a || !st.b) return true;
  const double a = *st.a, b = *st.b, nn = n, p = params.p;
  const bool eq1 = a * p < nn && b * p < nn;
  const bool eq2 = 3.0 * st.s <= nn - a - b;
  const bool eq3 = 3.0 * p * (st.r + st.s) <= 2.0 * (p - 1.0) * nn;
  return eq1 && eq2 && eq3;
}

namespace {

bool is_big(const TernaryTree& t, NodeId c, NodeId n, double p) {
  return static_cast<double>(t.subtree_size(c)) * p >= static_cast<double>(n);
}

std::vector<NodeId> path_or_empty(const TernaryTree& t, const HeavyOrder& order, NodeId start) {
  if (start == kNoNode) return {};
  return heavy_path(t, order, start);
}

RailDecomposition decompose_with(const TernaryTree& t, const HeavyOrder& order, const LayoutParams& params,
                                 NodeId root) {
  RailDecomposition d;
  d.subtree_root = root;
  d.n = t.subtree_size(root);
  if (d.n < 2) throw std::invalid_argument("decompose: subtree needs at least two nodes");

  d.pi = heavy_path(t, order, root);
  const int k = static_cast<int>(d.pi.size());
  for (int i = 0; i < k && !d.x; ++i) {
    int big = 0;
    for (NodeId c : t.children(d.pi[i])) big += is_big(t, c, d.n, params.p) ? 1 : 0;
    if (big >= 2) d.x = i + 1;
  }
  const int x = d.x.value_or(k + 1);

  // Rails, as 0-based slices of pi: P holds pi[0..x-2], Q holds pi[x-1..k-1].
  if (x >= 2) {
    d.rho = path_or_empty(t, order, order.M(root));
    if (x == 2) {
      d.sigma = path_or_empty(t, order, order.L(root));
    } else if (x <= k) {
      d.sigma = path_or_empty(t, order, order.M(d.pi[x - 2]));
    }
  }
  if (x <= k) d.tau = path_or_empty(t, order, order.M(d.pi[x - 1]));

  d.P.assign(d.rho.rbegin(), d.rho.rend());
  for (int i = 0; i + 1 < x && i < k; ++i) d.P.push_back(d.pi[i]);
  d.P.insert(d.P.end(), d.sigma.begin(), d.sigma.end());
  for (int i = k - 1; i >= x - 1; --i) d.Q.push_back(d.pi[i]);
  d.Q.insert(d.Q.end(), d.tau.begin(), d.tau.end());

  // Off-rail children: M goes on top, L below, except L(pi_{x-1}) goes on top.
  std::vector<NodeId> rail(d.P);
  rail.insert(rail.end(), d.Q.begin(), d.Q.end());
  std::sort(rail.begin(), rail.end());
  auto on_rail = [&](NodeId v) { return std::binary_search(rail.begin(), rail.end(), v); };
  const NodeId turn_parent = (x >= 3 && x <= k) ? d.pi[x - 2] : kNoNode;
  auto attach_for = [&](NodeId u, bool on_p) {
    for (NodeId c : t.children(u)) {
      if (on_rail(c)) continue;
      bool top = c == order.M(u);
      if (c == order.L(u) && u == turn_parent) top = true;
      d.attachments.push_back({u, c, top, on_p});
    }
  };
  for (NodeId u : d.P) attach_for(u, true);
  for (NodeId u : d.Q) attach_for(u, false);
  return d;
}

}  // namespace

RailDecomposition decompose(const TernaryTree& t, const LayoutParams& params, NodeId subtree_root) {
  if (subtree_root < 0 || subtree_root >= t.size()) throw std::invalid_argument("decompose: bad root");
  return decompose_with(t, heavy_order(t), params, subtree_root);
}

DecompositionStats decomposition_stats(const RailDecomposition& d, const TernaryTree& t) {
  DecompositionStats st;
  NodeId a = 0, b = 0;
  for (const Attachment& at : d.attachments) {
    const NodeId sz = t.subtree_size(at.child);
    if (at.on_p) {
      (at.top ? a : b) = std::max(at.top ? a : b, sz);
    } else {
      (at.top ? st.r : st.s) = std::max(at.top ? st.r : st.s, sz);
    }
  }
  if (d.x && *d.x >= 3) {
    st.a = a;
    st.b = b;
  }
  return st;
}

namespace {

// Column/row reach of a rail node together with its attachments, measured
// from the node.
struct Cluster {
  Coord left = 0, right = 0, above = 0, below = 0;
};

class GeneralLayout {
 public:
  GeneralLayout(const TernaryTree& t, const LayoutParams& params, const DecompositionObserver& observer)
      : t_(t), order_(heavy_order(t)), params_(params), observer_(observer), pos_(t.size()), cluster_(t.size()) {}

  std::vector<Point> run() {
    draw(t_.root());
    return std::move(pos_);
  }

 private:
  // Lays out the subtree of v into pos_[v, v+size) with v at the origin and
  // returns its bounding box.
  BoundingBox draw(NodeId v) {
    pos_[v] = {0, 0};
    if (t_.subtree_size(v) == 1) return {0, 0, 0, 0};

    const RailDecomposition d = decompose_with(t_, order_, params_, v);
    if (observer_) observer_(d);

    struct Hung {
      Attachment at;
      BoundingBox box;  // relative to the child root, before rotation
    };
    std::vector<Hung> hung;
    hung.reserve(d.attachments.size());
    for (const Attachment& at : d.attachments) hung.push_back({at, draw(at.child)});

    // Cluster per rail node; every node is a rail node at exactly one level,
    // so the shared table never needs clearing.
    for (NodeId u : d.P) cluster_[u] = {};
    for (NodeId u : d.Q) cluster_[u] = {};
    for (const Hung& h : hung) {
      Cluster& c = cluster_[h.at.parent];
      if (h.at.top) {
        c.left = std::max(c.left, h.box.xmax);
        c.right = std::max(c.right, -h.box.xmin);
        c.above = std::max(c.above, h.box.height());
      } else {
        c.left = std::max(c.left, -h.box.xmin);
        c.right = std::max(c.right, h.box.xmax);
        c.below = std::max(c.below, h.box.height());
      }
    }
    auto cluster_of = [&](NodeId u) { return cluster_[u]; };

    // Rail P on row 0, packed left to right.
    BoundingBox p_part{0, -1, 0, 0};  // empty when xmax < xmin
    Coord p_below = 0;
    Coord x_cursor = 0;
    for (std::size_t i = 0; i < d.P.size(); ++i) {
      const Cluster c = cluster_of(d.P[i]);
      x_cursor = i == 0 ? 0 : x_cursor + 1 + c.left;
      pos_[d.P[i]] = {x_cursor, 0};
      if (i == 0) p_part = {x_cursor - c.left, x_cursor, 0, 0};
      p_part.xmax = x_cursor + c.right;
      p_part.ymin = std::min(p_part.ymin, -c.above);
      p_below = std::max(p_below, c.below);
      x_cursor += c.right;
    }
    p_part.ymax = p_below;

    if (!d.Q.empty()) {
      const int x = *d.x;
      const std::size_t turn = d.pi.size() - static_cast<std::size_t>(x);  // index of pi_x in Q
      const NodeId pix = d.Q[turn];
      const Coord row = d.P.empty() ? 0 : p_below + 1;
      const Coord col = d.P.empty() ? 0 : pos_[d.pi[x - 2]].x;
      pos_[pix] = {col, row};
      const Cluster cx = cluster_of(pix);
      Coord block_left = col - cx.left, block_right = col + cx.right;
      if (!d.P.empty()) {
        block_left = std::min(block_left, p_part.xmin);
        block_right = std::max(block_right, p_part.xmax);
      }
      // pi_{x+1}, pi_{x+2}, ... leftward, starting clear of the whole block.
      Coord edge = block_left - 1;
      for (std::size_t i = turn; i-- > 0;) {
        const Cluster c = cluster_of(d.Q[i]);
        pos_[d.Q[i]] = {edge - c.right, row};
        edge = edge - c.right - c.left - 1;
      }
      // tau rightward, also clear of the block.
      edge = block_right + 1;
      for (std::size_t i = turn + 1; i < d.Q.size(); ++i) {
        const Cluster c = cluster_of(d.Q[i]);
        pos_[d.Q[i]] = {edge + c.left, row};
        edge = edge + c.left + c.right + 1;
      }
    }

    for (const Hung& h : hung) {
      const Point u = pos_[h.at.parent];
      const NodeId c = h.at.child;
      const NodeId end = c + t_.subtree_size(c);
      if (h.at.top) {
        const Coord ry = u.y - 1 + h.box.ymin;
        for (NodeId w = c; w < end; ++w) pos_[w] = {u.x - pos_[w].x, ry - pos_[w].y};
      } else {
        const Coord ry = u.y + 1 - h.box.ymin;
        for (NodeId w = c; w < end; ++w) pos_[w] = {u.x + pos_[w].x, ry + pos_[w].y};
      }
    }

    const Point origin = pos_[v];
    const NodeId end = v + t_.subtree_size(v);
    BoundingBox box{0, 0, 0, 0};
    for (NodeId w = v; w < end; ++w) {
      pos_[w] = {pos_[w].x - origin.x, pos_[w].y - origin.y};
      box.include(pos_[w]);
    }
    return box;
  }

  const TernaryTree& t_;
  HeavyOrder order_;
  LayoutParams params_;
  const DecompositionObserver& observer_;
  std::vector<Point> pos_;
  std::vector<Cluster> cluster_;
};

}  // namespace

GridDrawing draw_general(std::shared_ptr<const TernaryTree> t, const LayoutParams& params,
                         const DecompositionObserver& observer) {
  if (!t) throw std::invalid_argument("draw_general: null tree");
  if (!(params.p > 4.0)) throw std::invalid_argument("draw_general: p must exceed 4");
  std::vector<Point> pos = GeneralLayout(*t, params, observer).run();
  return GridDrawing(std::move(t), std::move(pos));
}

GridDrawing draw_general(const TernaryTree& t, const LayoutParams& params, const DecompositionObserver& observer) {
  return draw_general(std::make_shared<const TernaryTree>(t), params, observer);
}

}  // namespace terngrid
