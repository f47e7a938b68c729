#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "polarimeter/alienation.hpp"

namespace polarimeter {

/// g(p, q, α): the Axiom 3 characterization bound. A transfer of one
/// individual from a central group of q to each of two extreme groups of p,
/// at equal spacing d, raises P iff f(2d)/f(d) > g(p, q, α).
///
/// Small p uses the direct formula (exact for integer α in the range we
/// care about); large p divides through by p^{α+2} and uses expm1/log1p so
/// the leading terms cancel analytically rather than numerically.
///
/// Throws DomainError for p < 1, q < 2 or α < 0.
double g_value(std::int64_t p, std::int64_t q, double alpha);

namespace detail {
double g_direct(std::int64_t p, std::int64_t q, double alpha);
double g_scaled(std::int64_t p, std::int64_t q, double alpha);
inline constexpr std::int64_t kScaledFormulaFrom = 4096;
}  // namespace detail

/// lim_{p→∞} g(p, 2, α): 2 at α = 0, 2/(α+2) otherwise.
double g_q2_ray_limit(double alpha);

struct GridLimits {
  std::int64_t p_max = 64;
  std::int64_t q_max = 256;
};

struct SupOptions {
  GridLimits initial{};
  /// Doubling stops with NotStabilized once p_max would exceed this.
  std::int64_t max_p = std::int64_t{1} << 20;
  /// Log-spaced samples per factor of two beyond the dense block.
  int points_per_octave = 32;
  /// Every integer up to this is sampled on both axes.
  std::int64_t dense_limit = 64;
};

struct SupEstimate {
  double alpha = 0.0;
  double value = 0.0;                      // running max of g (and ray limit)
  std::pair<std::int64_t, std::int64_t> argmax{1, 2};
  GridLimits grid_limits{};                // limits at which it stabilized
  bool stabilized = false;
  bool from_ray_limit = false;             // value is the q = 2 ray limit
  std::uint64_t evaluations = 0;
  double last_change = 0.0;                // change across the final doubling
  /// Running max after each doubling (non-decreasing).
  std::vector<double> history;
};

/// M_α = sup g(p, q, α) over integers p ≥ 1, q ≥ 2, estimated on a grid
/// that is dense up to 64 and log-spaced beyond, with each p-row refined to
/// its best integer q. Limits double until the running max moves by less
/// than tolerance·max(1, M). Throws NotStabilized if limits run out.
SupEstimate sup_g(double alpha, double tolerance = 1e-8, const SupOptions& options = {});

/// One grid evaluation at fixed limits (no doubling); stabilized = false.
SupEstimate max_g_on_grid(double alpha, GridLimits limits, const SupOptions& options = {});

struct ThresholdEstimate {
  double bound = 0.0;
  double alpha_critical = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  GridLimits grid_limits{};                          // largest limits used
  std::vector<std::pair<double, double>> m_alpha_samples;  // (α, M_α), sorted by α
  double tolerance = 0.0;
  int iterations = 0;
};

inline constexpr std::pair<double, double> kDefaultAlphaRange{1.0, 4.0};
inline constexpr int kMaxBisectionIterations = 40;
inline constexpr double kDefaultSupTolerance = 1e-8;

/// Bisects α on `alpha_range` for the crossing M_α = bound. Requires
/// M_lo < bound ≤ M_hi (NoSignChange otherwise). M_α is only monotone for
/// α ≥ 1, which is why the default range starts there.
ThresholdEstimate critical_alpha(double bound, double tolerance,
                                 std::pair<double, double> alpha_range = kDefaultAlphaRange,
                                 double sup_tolerance = kDefaultSupTolerance,
                                 const SupOptions& options = {});

/// min over the grid of f(2d)/f(d). DomainError when the grid is empty,
/// holds a non-positive d, or 2d leaves the function's domain.
double ratio_infimum(const Alienation& fn, std::span<const double> d_grid);

/// Log-spaced distances in [1e-3, 1e2], clipped to half the domain of a
/// tabulated function.
std::vector<double> default_ratio_grid(const Alienation& fn, std::size_t points = 201);

/// Largest α for which f(2d)/f(d) > g(p, q, α) on every probe: bisects
/// against bound = ratio_infimum(fn). The feasible set is (0, alpha_critical].
/// Requires f non-decreasing and convex on the default shape grid
/// (InvalidArgument otherwise), which guarantees bound ≥ 2.
ThresholdEstimate feasible_alpha_interval(const Alienation& fn, double tolerance,
                                          double sup_tolerance = kDefaultSupTolerance);

/// `alpha,m_alpha` CSV with a header row.
void write_m_alpha_csv(std::ostream& out, std::span<const std::pair<double, double>> samples);

}  // namespace polarimeter
