#pragma once

#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "terngrid/layout_complete.hpp"

namespace terngrid {

/// How a frontier pair of T_h is obtained from the frontier of T_{h-1}:
/// both arms drawn with pair `arm`, the center with pair `center`.
/// For h = 1 the recipe is {-1, -1, 0}.
struct Recipe {
  int arm = -1;
  int center = -1;
  int construction = 0;  // 1 or 2; 0 for the single point

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

struct ParetoPair {
  Coord width = 1;
  Coord height = 1;
  Recipe recipe;

  Coord area() const { return width * height; }
};

/// Pareto-optimal (width, height) pairs of 1-2 drawings of T_h, sorted by
/// increasing width and strictly decreasing height.
struct ParetoFrontier {
  int h = 1;
  std::vector<ParetoPair> pairs;

  /// Index of the pair with exactly these dimensions, if any.
  std::optional<int> find(Coord width, Coord height) const;
  std::vector<std::pair<Coord, Coord>> dimensions() const;
};

/// The h = 1 frontier {(1, 1)}.
ParetoFrontier base_frontier();

/// One DP level: all (arm, center, construction) triples over `prev` with
/// left and right widths equal to (width - 1) / 2. The triple loop is split
/// over `threads` workers (0 = hardware concurrency); the result does not
/// depend on the split.
ParetoFrontier next_frontier(const ParetoFrontier& prev, unsigned threads = 0);

/// On-disk store of per-level frontiers, one text file per h.
class FrontierCache {
 public:
  explicit FrontierCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(int h) const;

  /// Returns nullopt when the file is absent. Throws std::runtime_error on a
  /// malformed file.
  std::optional<ParetoFrontier> load(int h) const;
  void store(const ParetoFrontier& f) const;

 private:
  std::filesystem::path dir_;
};

void write_frontier(std::ostream& out, const ParetoFrontier& f);
/// Throws std::runtime_error on malformed input.
ParetoFrontier read_frontier(std::istream& in);

/// Frontiers for T_1..T_h (index i holds h = i + 1). Levels found in
/// `cache` are loaded instead of computed; computed levels are stored.
std::vector<ParetoFrontier> frontiers_up_to(int h, const FrontierCache* cache = nullptr, unsigned threads = 0);

ParetoFrontier frontier(int h);

struct MinArea {
  Coord area = 1;
  ParetoPair pair;
  int index = 0;  // position in the frontier
};

/// Smallest width * height; equal areas go to the smaller width.
MinArea min_area(const ParetoFrontier& f);
MinArea min_area(int h);

/// Builds a drawing realizing `frontiers[h-1].pairs[index]` from its recipe,
/// reusing each intermediate drawing once.
OneTwoDrawing reconstruct_drawing(const std::vector<ParetoFrontier>& frontiers, int h, int index);

/// Throws std::invalid_argument if (width, height) is not on frontier(h).
OneTwoDrawing reconstruct_drawing(int h, std::pair<Coord, Coord> pair);

/// Every 1-2 drawing of T_h for h <= 4 built with the geometric combinators
/// over all slot assignments and both constructions (no pruning, no
/// symmetry assumption), plus the Pareto filter of their measured sizes.
struct ExhaustiveResult {
  ParetoFrontier frontier;
  std::vector<OneTwoDrawing> drawings;  // distinct position sets at level h
};

/// Throws std::invalid_argument for h < 1 or h > 4.
ExhaustiveResult exhaustive_frontier(int h);

}  // namespace terngrid
