#include "terngrid/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace terngrid {

const std::vector<AreaRow>& reference_area_table() {
  static const std::vector<AreaRow> rows = {
      {1, 1, 1},
      {2, 4, 6},
      {3, 13, 25},
      {4, 40, 99},
      {5, 121, 342},
      {6, 364, 1184},
      {7, 1093, 4030},
      {8, 3280, 13320},
      {9, 9841, 44457},
      {10, 29524, 144690},
      {11, 88573, 469221},
      {12, 265720, 1520189},
      {13, 797161, 4840478},
      {14, 2391484, 15550542},
      {15, 7174453, 49461933},
      {16, 21523360, 157388427},
      {17, 64570081, 498895215},
      {18, 193710244, 1580110511},
      {19, 581130733, 4990796080},
      {20, 1743392200, 15765654805},
  };
  return rows;
}

double power_law_sse(const std::vector<std::pair<double, double>>& points, double a, double b, double c) {
  long double s = 0;
  for (const auto& [n, area] : points) {
    const long double r = static_cast<long double>(a) * std::pow(static_cast<long double>(n), b) + c - area;
    s += r * r;
  }
  return static_cast<double>(s);
}

namespace {

struct Linear {
  long double a = 0, c = 0, sse = 0;
};

// Least squares for area = a * n^b + c at fixed b, in centered form.
Linear solve_linear(const std::vector<std::pair<double, double>>& points, double b) {
  const long double m = static_cast<long double>(points.size());
  long double mx = 0, my = 0;
  std::vector<long double> xs;
  xs.reserve(points.size());
  for (const auto& [n, area] : points) {
    xs.push_back(std::pow(static_cast<long double>(n), static_cast<long double>(b)));
    mx += xs.back();
    my += area;
  }
  mx /= m;
  my /= m;
  long double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const long double dx = xs[i] - mx;
    sxx += dx * dx;
    sxy += dx * (points[i].second - my);
  }
  Linear out;
  out.a = sxx > 0 ? sxy / sxx : 0;
  out.c = my - out.a * mx;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const long double r = out.a * xs[i] + out.c - points[i].second;
    out.sse += r * r;
  }
  return out;
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("fit_power_law: need at least 3 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].first > 0)) throw std::invalid_argument("fit_power_law: n must be positive");
    if (i > 0 && !(points[i].first > points[i - 1].first)) {
      throw std::invalid_argument("fit_power_law: n must be strictly increasing");
    }
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.5, hi = 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  long double f1 = solve_linear(points, x1).sse, f2 = solve_linear(points, x2).sse;
  while (hi - lo >= 1e-6) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = solve_linear(points, x1).sse;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = solve_linear(points, x2).sse;
    }
  }
  const double b = (lo + hi) / 2;
  const Linear lin = solve_linear(points, b);
  PowerLawFit fit;
  fit.a = static_cast<double>(lin.a);
  fit.b = b;
  fit.c = static_cast<double>(lin.c);
  fit.sse = power_law_sse(points, fit.a, fit.b, fit.c);
  return fit;
}

}  // namespace terngrid
