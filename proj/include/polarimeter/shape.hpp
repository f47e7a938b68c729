#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polarimeter/alienation.hpp"

namespace polarimeter {

// Sampled surrogates for the analytic shape conditions on f.

inline constexpr double kShapeTolerance = 1e-9;
inline constexpr std::size_t kDefaultShapeGridPoints = 1000;
inline constexpr double kDefaultShapeDistance = 10.0;

struct MonotonicityResult {
  bool nondecreasing = true;
  /// First consecutive grid pair (d_i, d_{i+1}) with f(d_i) > f(d_{i+1}) + tol.
  std::optional<std::pair<double, double>> witness;
};

struct ConvexityWitness {
  double a;
  double b;
  double f_mid;    // f((a+b)/2)
  double chord;    // (f(a)+f(b))/2
  double margin;   // f_mid − chord (> tolerance)
};

struct ConvexityResult {
  bool convex = true;
  std::optional<ConvexityWitness> witness;  // worst violating pair
  std::size_t pairs_checked = 0;
};

/// `points` uniform samples on [0, d_max], endpoints included.
std::vector<double> uniform_grid(double d_max, std::size_t points = kDefaultShapeGridPoints);

/// Default grid for shape checks on f: [0, min(d_max, domain end)].
std::vector<double> default_shape_grid(const Alienation& fn,
                                       double d_max = kDefaultShapeDistance);

/// Throws EmptyGrid, UnsortedGrid, NegativeDistance.
MonotonicityResult is_nondecreasing(const Alienation& fn, std::span<const double> grid,
                                    double tolerance = kShapeTolerance);

/// f((a+b)/2) ≤ (f(a)+f(b))/2 + tolerance for every grid pair a < b.
/// Throws GridTooSmall for fewer than 3 points.
ConvexityResult is_midpoint_convex(const Alienation& fn, std::span<const double> grid,
                                   double tolerance = kShapeTolerance);

}  // namespace polarimeter
