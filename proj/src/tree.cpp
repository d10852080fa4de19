#include "terngrid/tree.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace terngrid {

TernaryTree::TernaryTree(NodeId n)
    : child_(n, {kNoNode, kNoNode, kNoNode}),
      child_count_(n, 0),
      parent_(n, kNoNode),
      size_(n, 1),
      depth_(n, 1) {}

TernaryTree TernaryTree::from_children(const std::vector<std::vector<NodeId>>& children) {
  const auto n = static_cast<NodeId>(children.size());
  if (n < 1) throw std::invalid_argument("tree must have at least one node");
  TernaryTree t(n);
  for (NodeId v = 0; v < n; ++v) {
    if (children[v].size() > kMaxChildren) {
      throw std::invalid_argument("node " + std::to_string(v) + " has more than 3 children");
    }
    for (std::size_t s = 0; s < children[v].size(); ++s) {
      const NodeId c = children[v][s];
      if (c <= 0 || c >= n) throw std::invalid_argument("child id out of range: " + std::to_string(c));
      if (t.parent_[c] != kNoNode) {
        throw std::invalid_argument("node " + std::to_string(c) + " has two parents");
      }
      t.parent_[c] = v;
      t.child_[v][s] = c;
    }
    t.child_count_[v] = static_cast<std::uint8_t>(children[v].size());
  }

  // Preorder check: an explicit-stack traversal must visit 0,1,2,... in order.
  std::vector<NodeId> stack{0};
  NodeId expected = 0;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (v != expected) throw std::invalid_argument("node ids are not in preorder");
    ++expected;
    for (int s = t.child_count_[v] - 1; s >= 0; --s) stack.push_back(t.child_[v][s]);
  }
  if (expected != n) throw std::invalid_argument("tree is not connected");

  for (NodeId v = 1; v < n; ++v) t.depth_[v] = t.depth_[t.parent_[v]] + 1;
  for (NodeId v = n - 1; v > 0; --v) t.size_[t.parent_[v]] += t.size_[v];
  return t;
}

TernaryTree TernaryTree::canonicalize(NodeId root, const std::vector<std::vector<NodeId>>& children) {
  const auto n = static_cast<NodeId>(children.size());
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  std::vector<NodeId> relabel(n, kNoNode);
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (v < 0 || v >= n) throw std::invalid_argument("child id out of range");
    if (relabel[v] != kNoNode) throw std::invalid_argument("graph is not a tree");
    relabel[v] = static_cast<NodeId>(order.size());
    order.push_back(v);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
  }
  if (static_cast<NodeId>(order.size()) != n) throw std::invalid_argument("tree is not connected");
  std::vector<std::vector<NodeId>> out(n);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId c : children[order[v]]) out[v].push_back(relabel[c]);
  }
  return from_children(out);
}

bool TernaryTree::is_complete(int* height) const {
  const int h = depth_[size() - 1];  // last preorder node is a leaf
  for (NodeId v = 0; v < size(); ++v) {
    if (child_count_[v] == 0) {
      if (depth_[v] != h) return false;
    } else if (child_count_[v] != 3) {
      return false;
    }
  }
  if (height != nullptr) *height = h;
  return true;
}

bool TernaryTree::subtree_matches(NodeId v, const TernaryTree& other) const {
  if (size_[v] != other.size()) return false;
  for (NodeId i = 0; i < other.size(); ++i) {
    if (child_count_[v + i] != other.child_count_[i]) return false;
  }
  // Equal child counts along a shared preorder fix the shape.
  return true;
}

std::int64_t complete_tree_size(int h) {
  std::int64_t p = 1;
  for (int i = 0; i < h; ++i) p *= 3;
  return (p - 1) / 2;
}

TernaryTree complete_tree(int h) {
  if (h < 1) throw std::invalid_argument("complete_tree: h must be >= 1");
  if (h > 20) throw std::invalid_argument("complete_tree: h > 20 is too large to materialize");
  // Preorder layout: the three subtrees of a T_k root are consecutive blocks of |T_{k-1}|.
  const auto n = static_cast<NodeId>(complete_tree_size(h));
  std::vector<std::vector<NodeId>> children(n);
  struct Frame {
    NodeId id;
    int level;
  };
  std::vector<Frame> stack{{0, h}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.level == 1) continue;
    const auto block = static_cast<NodeId>(complete_tree_size(f.level - 1));
    for (int s = 0; s < 3; ++s) {
      const NodeId c = f.id + 1 + s * block;
      children[f.id].push_back(c);
      stack.push_back({c, f.level - 1});
    }
  }
  return TernaryTree::from_children(children);
}

TernaryTree path_tree(NodeId n) {
  if (n < 1) throw std::invalid_argument("path_tree: n must be >= 1");
  std::vector<std::vector<NodeId>> children(n);
  for (NodeId v = 0; v + 1 < n; ++v) children[v].push_back(v + 1);
  return TernaryTree::from_children(children);
}

TernaryTree caterpillar_tree(NodeId spine, int legs) {
  if (spine < 1 || legs < 0 || legs > 2) throw std::invalid_argument("caterpillar_tree: bad shape");
  const NodeId n = spine * (1 + legs);
  std::vector<std::vector<NodeId>> children(n);
  // Spine node i gets id i, leaves get ids after the spine; canonicalize renumbers.
  for (NodeId i = 0; i < spine; ++i) {
    if (i + 1 < spine) children[i].push_back(i + 1);
    for (int l = 0; l < legs; ++l) children[i].push_back(spine + i * legs + l);
  }
  return TernaryTree::canonicalize(0, children);
}

TernaryTree random_ternary_tree(NodeId n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_ternary_tree: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<NodeId>> children(n);
  // Nodes with a free slot; swap-remove once full.
  std::vector<NodeId> open{0};
  for (NodeId i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t k = pick(rng);
    const NodeId p = open[k];
    children[p].push_back(i);
    if (children[p].size() == kMaxChildren) {
      open[k] = open.back();
      open.pop_back();
    }
    open.push_back(i);
  }
  return TernaryTree::canonicalize(0, children);
}

std::vector<NodeId> subtree_sizes(const TernaryTree& t) {
  std::vector<NodeId> out(t.size());
  for (NodeId v = 0; v < t.size(); ++v) out[v] = t.subtree_size(v);
  return out;
}

HeavyOrder heavy_order(const TernaryTree& t) {
  HeavyOrder order;
  order.heavy.assign(t.size(), kNoNode);
  order.middle.assign(t.size(), kNoNode);
  order.light.assign(t.size(), kNoNode);
  for (NodeId v = 0; v < t.size(); ++v) {
    std::array<NodeId, kMaxChildren> ranked{kNoNode, kNoNode, kNoNode};
    const auto kids = t.children(v);
    std::copy(kids.begin(), kids.end(), ranked.begin());
    std::stable_sort(ranked.begin(), ranked.begin() + kids.size(),
                     [&](NodeId a, NodeId b) { return t.subtree_size(a) > t.subtree_size(b); });
    order.heavy[v] = ranked[0];
    order.middle[v] = ranked[1];
    order.light[v] = ranked[2];
  }
  return order;
}

std::vector<NodeId> heavy_path(const TernaryTree& t, const HeavyOrder& order, NodeId start) {
  if (start < 0 || start >= t.size()) throw std::invalid_argument("heavy_path: start out of range");
  std::vector<NodeId> path{start};
  while (!t.is_leaf(path.back())) path.push_back(order.H(path.back()));
  return path;
}

std::vector<NodeId> heavy_path(const TernaryTree& t, NodeId start) {
  return heavy_path(t, heavy_order(t), start);
}

}  // namespace terngrid
