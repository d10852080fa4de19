#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace terngrid {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;
inline constexpr int kMaxChildren = 3;

/// Rooted tree with at most three ordered children per node.
///
/// Node ids are the preorder numbering 0..n-1 (children visited in slot
/// order), so the subtree of v occupies the contiguous id range
/// [v, v + subtree_size(v)). Trees are immutable once built.
class TernaryTree {
 public:
  /// Builds from per-node child lists. Throws std::invalid_argument unless the
  /// lists describe a single rooted tree at 0 whose ids are in preorder.
  static TernaryTree from_children(const std::vector<std::vector<NodeId>>& children);

  /// Builds from arbitrary ids and a root, renumbering to preorder.
  static TernaryTree canonicalize(NodeId root, const std::vector<std::vector<NodeId>>& children);

  TernaryTree() : TernaryTree(1) {}

  NodeId size() const { return static_cast<NodeId>(parent_.size()); }
  NodeId root() const { return 0; }

  std::span<const NodeId> children(NodeId v) const {
    return {child_[v].data(), static_cast<std::size_t>(child_count_[v])};
  }
  int child_count(NodeId v) const { return child_count_[v]; }
  bool is_leaf(NodeId v) const { return child_count_[v] == 0; }
  std::optional<NodeId> parent(NodeId v) const {
    if (parent_[v] == kNoNode) return std::nullopt;
    return parent_[v];
  }
  NodeId subtree_size(NodeId v) const { return size_[v]; }
  /// Number of nodes on the root-to-v path, v included.
  int depth(NodeId v) const { return depth_[v]; }

  /// True iff v is an ancestor of w (or v == w).
  bool is_ancestor(NodeId v, NodeId w) const { return v <= w && w < v + size_[v]; }

  /// True iff the tree is T_h for some h (every internal node has three
  /// children, all leaves at the same depth). Writes h when non-null.
  bool is_complete(int* height = nullptr) const;

  bool operator==(const TernaryTree& other) const {
    return child_count_ == other.child_count_ && child_ == other.child_;
  }

  /// Structural equality of the subtree rooted at `v` with the whole of `other`.
  bool subtree_matches(NodeId v, const TernaryTree& other) const;

 private:
  explicit TernaryTree(NodeId n);

  std::vector<std::array<NodeId, kMaxChildren>> child_;
  std::vector<std::uint8_t> child_count_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> size_;
  std::vector<int> depth_;
};

/// (3^h - 1) / 2, the node count of T_h.
std::int64_t complete_tree_size(int h);
TernaryTree complete_tree(int h);
TernaryTree path_tree(NodeId n);
/// Spine of `spine` nodes, each spine node carrying `legs` extra leaves (0..2).
TernaryTree caterpillar_tree(NodeId spine, int legs);

/// Random tree: node i attaches to a uniformly chosen earlier node that still
/// has a free child slot, appended to its child list. Uses std::mt19937_64
/// seeded with `seed`; the result is renumbered to preorder.
TernaryTree random_ternary_tree(NodeId n, std::uint64_t seed);

std::vector<NodeId> subtree_sizes(const TernaryTree& t);

/// Children of each node ranked by non-increasing subtree size; equal sizes
/// keep slot order.
struct HeavyOrder {
  std::vector<NodeId> heavy, middle, light;  // kNoNode where absent

  NodeId H(NodeId v) const { return heavy[v]; }
  NodeId M(NodeId v) const { return middle[v]; }
  NodeId L(NodeId v) const { return light[v]; }
};

HeavyOrder heavy_order(const TernaryTree& t);

/// Path from `start` that always steps into the heaviest child, ending at a leaf.
std::vector<NodeId> heavy_path(const TernaryTree& t, const HeavyOrder& order, NodeId start);
std::vector<NodeId> heavy_path(const TernaryTree& t, NodeId start);

}  // namespace terngrid
