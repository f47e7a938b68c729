#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polarimeter/alienation.hpp"
#include "polarimeter/antagonism.hpp"
#include "polarimeter/distribution.hpp"

namespace polarimeter {

enum class Ordering { FirstHigher, SecondHigher, Tie };

std::string_view to_string(Ordering ordering) noexcept;

inline constexpr double kDefaultTieTolerance = 1e-12;

struct ComparisonResult {
  double p1 = 0.0;
  double p2 = 0.0;
  Ordering ordering = Ordering::Tie;
  AntagonismSpec spec;
};

/// Tie when |p1 − p2| ≤ tie_tolerance · max(|p1|, |p2|).
Ordering classify(double p1, double p2, double tie_tolerance = kDefaultTieTolerance);

ComparisonResult compare(const Distribution& d1, const Distribution& d2,
                         const AntagonismSpec& spec,
                         double tie_tolerance = kDefaultTieTolerance);

struct Crossover {
  double lo = 0.0;  // bracket endpoints, strict opposite orderings
  double hi = 0.0;
  double alpha = 0.0;
  Ordering from = Ordering::Tie;  // ordering at lo
  Ordering to = Ordering::Tie;    // ordering at hi
};

struct SeriesPoint {
  double alpha;
  double p1;
  double p2;
};

struct CrossoverResult {
  Alienation alienation;
  std::vector<double> alpha_grid;
  std::vector<Ordering> sign_series;
  std::vector<SeriesPoint> series;
  std::vector<Crossover> crossovers;
  double tolerance = 0.0;
};

inline constexpr double kDefaultCrossoverTolerance = 1e-6;
inline constexpr int kDefaultAlphaGridPoints = 64;

/// 64 uniform points on (0, 1.6]: 1.6·k/64, k = 1..64.
std::vector<double> default_alpha_grid();

/// `points` uniform points on [lo, hi]. Throws InvalidArgument unless
/// 0 ≤ lo < hi and points ≥ 2.
std::vector<double> uniform_alpha_grid(double lo, double hi, int points);

/// Orders d1 against d2 at each α in `alpha_grid` (sorted, ≥ 0). Each pair
/// of consecutive non-tie points with opposite orderings is a bracket,
/// narrowed by bisection until hi − lo ≤ tolerance.
CrossoverResult crossover_scan(const Distribution& d1, const Distribution& d2,
                               const Alienation& fn, std::span<const double> alpha_grid,
                               double tolerance = kDefaultCrossoverTolerance);

CrossoverResult crossover_alpha(const Distribution& d1, const Distribution& d2,
                                const Alienation& fn, std::pair<double, double> alpha_range,
                                int grid_points, double tolerance = kDefaultCrossoverTolerance);

/// One labelled row of an experiment table.
struct ExperimentRow {
  std::string label;
  std::vector<std::pair<std::string, double>> params;
  CrossoverResult result;
};

struct ExperimentTable {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  Distribution d1;
  Distribution d2;
  std::vector<ExperimentRow> rows;
};

struct MiddleClassParams {
  std::int64_t p = 10;
  std::int64_t q = 10;
  double y_span = 2.0;
  double offset = 0.1;
  /// How many of the q central individuals move, split evenly between the
  /// two extremes. 0 means the whole group.
  std::int64_t transferred = 0;
};

/// D1 = ((p, q, p), (0, s/2, s)). With full transfer
/// D2 = ((p, q/2, q/2, p), (0, offset, s − offset, s)); with partial transfer
/// of t individuals the remaining q − t stay at s/2.
/// Throws OddCentralGroup for odd q (or odd t), InvalidArgument for
/// offset outside [0, 0.1]; offset = 0 fails validation with
/// DuplicateCharacteristic.
std::pair<Distribution, Distribution> middle_class_pair(const MiddleClassParams& params);

ExperimentTable middle_class_transfer_experiment(const MiddleClassParams& params,
                                                 std::span<const Alienation> fn_list,
                                                 std::span<const double> alpha_grid);

struct ClusterParams {
  std::int64_t group_count = 9;
  std::int64_t group_size = 100;
  double dispersed_lo = 1.15;
  double dispersed_hi = 1.85;
  std::int64_t clusters_per_side = 10;
  std::int64_t cluster_size = 45;
  double left_position = 1.0;
  double right_position = 2.0;
  double md = 0.2;
  /// Spread each cluster towards the centre ([1, 1+md] and [2−md, 2]);
  /// otherwise centred on its position.
  bool inward = true;
};

/// D1: group_count groups of group_size evenly spaced on
/// [dispersed_lo, dispersed_hi]. D2: clusters_per_side groups of
/// cluster_size evenly spaced over a window of width md at each position.
/// Throws InvalidArgument for md ≤ 0 or non-positive counts.
std::pair<Distribution, Distribution> cluster_pair(const ClusterParams& params);

ExperimentTable cluster_concentration_experiment(const ClusterParams& params,
                                                 std::span<const Alienation> fn_list,
                                                 std::span<const double> alpha_grid);

/// One table per md value, other parameters held fixed.
std::vector<ExperimentTable> cluster_md_sweep(const ClusterParams& base,
                                              std::span<const double> md_values,
                                              std::span<const Alienation> fn_list,
                                              std::span<const double> alpha_grid);

}  // namespace polarimeter
