#include "polarimeter/shape.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polarimeter/error.hpp"

namespace polarimeter {
namespace {

void check_sorted_nonnegative(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0)) {
      fail(ErrorCode::NegativeDistance, "grid values must be >= 0");
    }
    if (i > 0 && grid[i] < grid[i - 1]) {
      fail(ErrorCode::UnsortedGrid, "grid must be sorted ascending");
    }
  }
}

}  // namespace

std::vector<double> uniform_grid(double d_max, std::size_t points) {
  if (points < 2 || !(d_max > 0.0) || !std::isfinite(d_max)) {
    fail(ErrorCode::InvalidArgument, "uniform grid needs >= 2 points and a positive span");
  }
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = d_max * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

std::vector<double> default_shape_grid(const Alienation& fn, double d_max) {
  return uniform_grid(std::min(d_max, fn.domain_max()));
}

MonotonicityResult is_nondecreasing(const Alienation& fn, std::span<const double> grid,
                                    double tolerance) {
  if (grid.empty()) fail(ErrorCode::EmptyGrid, "monotonicity check needs a non-empty grid");
  check_sorted_nonnegative(grid);
  MonotonicityResult result;
  double prev = fn(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = fn(grid[i]);
    if (prev > cur + tolerance) {
      result.nondecreasing = false;
      result.witness = std::pair{grid[i - 1], grid[i]};
      return result;
    }
    prev = cur;
  }
  return result;
}

ConvexityResult is_midpoint_convex(const Alienation& fn, std::span<const double> grid,
                                   double tolerance) {
  if (grid.size() < 3) {
    fail(ErrorCode::GridTooSmall,
         "midpoint convexity needs >= 3 grid points, got " + std::to_string(grid.size()));
  }
  check_sorted_nonnegative(grid);

  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = fn(grid[i]);

  ConvexityResult result;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      if (!(grid[i] < grid[j])) continue;
      ++result.pairs_checked;
      const double f_mid = fn(0.5 * (grid[i] + grid[j]));
      const double chord = 0.5 * (values[i] + values[j]);
      const double margin = f_mid - chord;
      if (margin > tolerance && (!result.witness || margin > result.witness->margin)) {
        result.convex = false;
        result.witness = ConvexityWitness{grid[i], grid[j], f_mid, chord, margin};
      }
    }
  }
  return result;
}

}  // namespace polarimeter
