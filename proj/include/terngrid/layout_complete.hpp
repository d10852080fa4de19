#pragma once

#include <memory>
#include <utility>

#include "terngrid/geometry.hpp"

namespace terngrid {

enum class Construction : int { kOne = 1, kTwo = 2 };

/// A drawing produced by the 1-2 rules: either the single point, or three
/// 1-2 drawings combined by Construction 1 or Construction 2.
///
/// Child slots map to roles as: slot 0 = left arm (rotated clockwise),
/// slot 1 = center (below the root, unrotated), slot 2 = right arm
/// (rotated counterclockwise).
class OneTwoDrawing {
 public:
  static OneTwoDrawing point();

  const GridDrawing& drawing() const { return drawing_; }
  const Extents& extents() const { return extents_; }
  int height_index() const { return h_; }

 private:
  OneTwoDrawing(GridDrawing d, int h);

  friend OneTwoDrawing assemble(Construction, const OneTwoDrawing&, const OneTwoDrawing&,
                                const OneTwoDrawing&, std::shared_ptr<const TernaryTree>);

  GridDrawing drawing_;
  Extents extents_;
  int h_;
};

/// Shared, cached T_h instance.
std::shared_ptr<const TernaryTree> shared_complete_tree(int h);

/// Construction 1: `center` hangs one row below the root, `left` is rotated
/// 90 degrees clockwise and placed one column left of the center drawing,
/// `right` rotated counterclockwise one column right of it; arm roots share
/// the root's row.
///
/// `root_tree` defaults to the tree whose root has children (left, center,
/// right) in slots 0..2. Throws std::invalid_argument on a subtree mismatch.
OneTwoDrawing construction1(const OneTwoDrawing& center, const OneTwoDrawing& left,
                            const OneTwoDrawing& right,
                            std::shared_ptr<const TernaryTree> root_tree = nullptr);

/// Construction 2: the rotated arms flank the root one column away, and
/// `center` hangs one row below the lower of the two arms.
OneTwoDrawing construction2(const OneTwoDrawing& center, const OneTwoDrawing& left,
                            const OneTwoDrawing& right,
                            std::shared_ptr<const TernaryTree> root_tree = nullptr);

OneTwoDrawing combine(Construction c, const OneTwoDrawing& center, const OneTwoDrawing& left,
                      const OneTwoDrawing& right,
                      std::shared_ptr<const TernaryTree> root_tree = nullptr);

// Closed-form dimension rules; inputs are unrotated extents.
Extents construction1_extents(const Extents& center, const Extents& left, const Extents& right);
Extents construction2_extents(const Extents& center, const Extents& left, const Extents& right);

OneTwoDrawing draw_c1_only(int h);
OneTwoDrawing draw_c2_only(int h);

/// First: Construction 1 over (center g1, arms g2); second: Construction 2
/// over (center g2, arms g1). The first has Fibonacci-like height, the
/// second small width.
std::pair<OneTwoDrawing, OneTwoDrawing> draw_golden(int h);

/// Construction 2 with arms Gamma_{h-1} and center Construction 1 over three
/// Gamma_{h-2}; bases are the unique drawings of T_1 and T_2.
OneTwoDrawing draw_upper_1149(int h);

// Dimension-only versions of the families above (any h up to ~60).
Extents c1_only_extents(int h);
Extents c2_only_extents(int h);
std::pair<Extents, Extents> golden_extents(int h);
/// Iterates width/height recurrences for draw_upper_1149; throws
/// std::logic_error if a width comes out even.
Extents upper_1149_extents(int h);

}  // namespace terngrid
