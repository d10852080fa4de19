#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "terngrid/geometry.hpp"
#include "terngrid/verify.hpp"

namespace terngrid {

using Json = nlohmann::ordered_json;

/// Malformed tree, drawing or table input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": int, "root": 0, "children": [[ids...], ...]}
Json tree_to_json(const TernaryTree& t);
TernaryTree tree_from_json(const Json& j);

/// {"tree": <tree>, "pos": [[x, y], ...]}
Json drawing_to_json(const GridDrawing& d);

/// A drawing file may carry non-integral coordinates; those cannot form a
/// GridDrawing and are reported as off the grid.
struct ParsedDrawing {
  std::shared_ptr<const TernaryTree> tree;
  std::optional<GridDrawing> drawing;  // empty iff some coordinate is non-integral
};

ParsedDrawing drawing_from_json(const Json& j);

/// Report with a fixed key order; leg/arm fields are null when absent.
Json report_to_json(const VerificationReport& r);

/// Report for a drawing that failed to land on the grid.
Json off_grid_report_json();

Json read_json_file(const std::filesystem::path& path);

}  // namespace terngrid
