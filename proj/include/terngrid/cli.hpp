#pragma once

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "terngrid/geometry.hpp"

namespace terngrid {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2, kExitInternal = 3 };

/// Bad command-line input (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// complete:<h>, random:<n>:<seed> or file:<path> (tree or drawing JSON).
std::shared_ptr<const TernaryTree> parse_tree_spec(const std::string& spec);

/// Algorithm names accepted by `draw`.
const std::vector<std::string>& algorithm_names();

/// Builds the drawing. Throws UsageError when a complete-tree algorithm gets
/// another tree. `cache_dir` is used by pareto-min (empty for none).
GridDrawing build_drawing(const std::shared_ptr<const TernaryTree>& t, const std::string& algo,
                          const std::string& cache_dir = "");

/// Parses a whitespace or comma separated table of (n, area) or (h, n, area)
/// rows; blank lines, '#' comments and one leading header are skipped.
std::vector<std::pair<double, double>> parse_area_table(std::istream& in);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace terngrid
