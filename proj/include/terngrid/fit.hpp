#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace terngrid {

/// area ~ a * n^b + c.
struct PowerLawFit {
  double a = 0, b = 1, c = 0;
  double sse = 0;
};

struct AreaRow {
  int h = 1;
  std::int64_t n = 1;
  std::int64_t area = 1;
};

/// Reference minimum areas of 1-2 drawings of T_1..T_20.
const std::vector<AreaRow>& reference_area_table();

/// Sum of squared residuals of a * n^b + c over `points` (n, area).
double power_law_sse(const std::vector<std::pair<double, double>>& points, double a, double b, double c);

/// Golden-section search over b in [0.5, 2] (stopping once the bracket is
/// below 1e-6), with a and c solved exactly by linear least squares for each
/// b. Throws std::invalid_argument for fewer than 3 points or n not strictly
/// increasing.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

}  // namespace terngrid
