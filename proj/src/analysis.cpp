#include "polarimeter/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "polarimeter/error.hpp"
#include "polarimeter/index.hpp"
#include "polarimeter/parallel.hpp"

namespace polarimeter {
namespace {

struct Point {
  double p1;
  double p2;
};

Point evaluate_pair(const Distribution& d1, const Distribution& d2, const Alienation& fn,
                    double alpha) {
  const AntagonismSpec spec(alpha, fn);
  return {evaluate_index(d1, spec), evaluate_index(d2, spec)};
}

std::vector<double> evenly_spaced(double lo, double hi, std::int64_t count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = 0.5 * (lo + hi);
    return out;
  }
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

ExperimentTable run_table(std::string name, std::vector<std::pair<std::string, double>> params,
                          std::pair<Distribution, Distribution> pair,
                          std::span<const Alienation> fn_list,
                          std::span<const double> alpha_grid) {
  ExperimentTable table{std::move(name), std::move(params), std::move(pair.first),
                        std::move(pair.second), {}};
  for (const auto& fn : fn_list) {
    table.rows.push_back(
        {fn.describe(), {}, crossover_scan(table.d1, table.d2, fn, alpha_grid)});
  }
  return table;
}

}  // namespace

std::string_view to_string(Ordering ordering) noexcept {
  switch (ordering) {
    case Ordering::FirstHigher: return "FirstHigher";
    case Ordering::SecondHigher: return "SecondHigher";
    case Ordering::Tie: return "Tie";
  }
  return "Unknown";
}

Ordering classify(double p1, double p2, double tie_tolerance) {
  const double scale = std::max(std::abs(p1), std::abs(p2));
  if (std::abs(p1 - p2) <= tie_tolerance * scale) return Ordering::Tie;
  return p1 > p2 ? Ordering::FirstHigher : Ordering::SecondHigher;
}

ComparisonResult compare(const Distribution& d1, const Distribution& d2,
                         const AntagonismSpec& spec, double tie_tolerance) {
  const double p1 = evaluate_index(d1, spec);
  const double p2 = evaluate_index(d2, spec);
  return {p1, p2, classify(p1, p2, tie_tolerance), spec};
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid(kDefaultAlphaGridPoints);
  for (int k = 1; k <= kDefaultAlphaGridPoints; ++k) grid[k - 1] = 1.6 * k / kDefaultAlphaGridPoints;
  return grid;
}

std::vector<double> uniform_alpha_grid(double lo, double hi, int points) {
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi) || points < 2) {
    fail(ErrorCode::InvalidArgument, "alpha grid needs 0 <= lo < hi and at least 2 points");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * i / (points - 1);
  grid.back() = hi;
  return grid;
}

CrossoverResult crossover_scan(const Distribution& d1, const Distribution& d2,
                               const Alienation& fn, std::span<const double> alpha_grid,
                               double tolerance) {
  if (alpha_grid.empty()) fail(ErrorCode::EmptyGrid, "alpha grid is empty");
  if (!(tolerance > 0.0)) fail(ErrorCode::InvalidArgument, "crossover tolerance must be > 0");
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] >= 0.0) || !std::isfinite(alpha_grid[i])) {
      fail(ErrorCode::NegativeAlpha, "alpha grid values must be finite and >= 0");
    }
    if (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1])) {
      fail(ErrorCode::UnsortedGrid, "alpha grid must be strictly increasing");
    }
  }

  CrossoverResult result{fn, {alpha_grid.begin(), alpha_grid.end()}, {}, {}, {}, tolerance};
  const auto points = parallel_map<Point>(alpha_grid.size(), [&](std::size_t i) {
    return evaluate_pair(d1, d2, fn, alpha_grid[i]);
  });
  for (std::size_t i = 0; i < points.size(); ++i) {
    result.series.push_back({alpha_grid[i], points[i].p1, points[i].p2});
    result.sign_series.push_back(classify(points[i].p1, points[i].p2));
  }

  std::size_t last = alpha_grid.size();  // index of last non-tie point
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    const Ordering here = result.sign_series[i];
    if (here == Ordering::Tie) continue;
    if (last != alpha_grid.size() && result.sign_series[last] != here) {
      Crossover c{alpha_grid[last], alpha_grid[i], 0.0, result.sign_series[last], here};
      bool tie_hit = false;
      while (c.hi - c.lo > tolerance) {
        const double mid = 0.5 * (c.lo + c.hi);
        if (mid <= c.lo || mid >= c.hi) break;
        const Point pt = evaluate_pair(d1, d2, fn, mid);
        const Ordering o = classify(pt.p1, pt.p2);
        if (o == Ordering::Tie) {
          c.alpha = mid;
          tie_hit = true;
          break;
        }
        (o == c.from ? c.lo : c.hi) = mid;
      }
      if (!tie_hit) c.alpha = 0.5 * (c.lo + c.hi);
      result.crossovers.push_back(c);
    }
    last = i;
  }
  return result;
}

CrossoverResult crossover_alpha(const Distribution& d1, const Distribution& d2,
                                const Alienation& fn, std::pair<double, double> alpha_range,
                                int grid_points, double tolerance) {
  const auto grid = uniform_alpha_grid(alpha_range.first, alpha_range.second, grid_points);
  return crossover_scan(d1, d2, fn, grid, tolerance);
}

std::pair<Distribution, Distribution> middle_class_pair(const MiddleClassParams& mp) {
  if (mp.p < 1 || mp.q < 1) fail(ErrorCode::InvalidArgument, "p and q must be >= 1");
  if (mp.q % 2 != 0) {
    fail(ErrorCode::OddCentralGroup, "central group q = " + std::to_string(mp.q) + " is odd");
  }
  const std::int64_t t = mp.transferred == 0 ? mp.q : mp.transferred;
  if (t < 0 || t > mp.q) fail(ErrorCode::InvalidArgument, "transferred must lie in [0, q]");
  if (t % 2 != 0) {
    fail(ErrorCode::OddCentralGroup, "transferred count " + std::to_string(t) + " is odd");
  }
  if (!(mp.offset >= 0.0) || mp.offset > 0.1) {
    fail(ErrorCode::InvalidArgument, "offset must lie in (0, 0.1]");
  }
  if (!(mp.y_span > 2.0 * mp.offset) || !std::isfinite(mp.y_span)) {
    fail(ErrorCode::InvalidArgument, "y_span must exceed twice the offset");
  }
  const double s = mp.y_span;
  const std::vector<std::int64_t> pi1{mp.p, mp.q, mp.p};
  const std::vector<double> y1{0.0, 0.5 * s, s};
  Distribution d1 = Distribution::from_counts(pi1, y1);

  std::vector<std::int64_t> pi2{mp.p, t / 2};
  std::vector<double> y2{0.0, mp.offset};
  if (t < mp.q) {
    pi2.push_back(mp.q - t);
    y2.push_back(0.5 * s);
  }
  pi2.insert(pi2.end(), {t / 2, mp.p});
  y2.insert(y2.end(), {s - mp.offset, s});
  return {std::move(d1), Distribution::from_counts(pi2, y2)};
}

ExperimentTable middle_class_transfer_experiment(const MiddleClassParams& mp,
                                                 std::span<const Alienation> fn_list,
                                                 std::span<const double> alpha_grid) {
  return run_table("middle_class_transfer",
                   {{"p", static_cast<double>(mp.p)},
                    {"q", static_cast<double>(mp.q)},
                    {"y_span", mp.y_span},
                    {"offset", mp.offset},
                    {"transferred", static_cast<double>(mp.transferred == 0 ? mp.q : mp.transferred)}},
                   middle_class_pair(mp), fn_list, alpha_grid);
}

std::pair<Distribution, Distribution> cluster_pair(const ClusterParams& cp) {
  if (!(cp.md > 0.0) || !std::isfinite(cp.md)) fail(ErrorCode::InvalidArgument, "md must be > 0");
  if (cp.group_count < 2 || cp.group_size < 1 || cp.clusters_per_side < 1 ||
      cp.cluster_size < 1) {
    fail(ErrorCode::InvalidArgument, "cluster counts and sizes must be positive");
  }
  if (!(cp.dispersed_hi > cp.dispersed_lo)) {
    fail(ErrorCode::InvalidArgument, "dispersed_hi must exceed dispersed_lo");
  }
  const auto y1 = evenly_spaced(cp.dispersed_lo, cp.dispersed_hi, cp.group_count);
  const std::vector<std::int64_t> pi1(y1.size(), cp.group_size);

  std::vector<double> left;
  std::vector<double> right;
  if (cp.inward) {
    left = evenly_spaced(cp.left_position, cp.left_position + cp.md, cp.clusters_per_side);
    right = evenly_spaced(cp.right_position - cp.md, cp.right_position, cp.clusters_per_side);
  } else {
    const double h = 0.5 * cp.md;
    left = evenly_spaced(cp.left_position - h, cp.left_position + h, cp.clusters_per_side);
    right = evenly_spaced(cp.right_position - h, cp.right_position + h, cp.clusters_per_side);
  }
  std::vector<double> y2 = left;
  y2.insert(y2.end(), right.begin(), right.end());
  const std::vector<std::int64_t> pi2(y2.size(), cp.cluster_size);
  return {Distribution::from_counts(pi1, y1), Distribution::from_counts(pi2, y2)};
}

ExperimentTable cluster_concentration_experiment(const ClusterParams& cp,
                                                 std::span<const Alienation> fn_list,
                                                 std::span<const double> alpha_grid) {
  return run_table("cluster_concentration",
                   {{"group_count", static_cast<double>(cp.group_count)},
                    {"group_size", static_cast<double>(cp.group_size)},
                    {"dispersed_lo", cp.dispersed_lo},
                    {"dispersed_hi", cp.dispersed_hi},
                    {"clusters_per_side", static_cast<double>(cp.clusters_per_side)},
                    {"cluster_size", static_cast<double>(cp.cluster_size)},
                    {"left_position", cp.left_position},
                    {"right_position", cp.right_position},
                    {"md", cp.md},
                    {"inward", cp.inward ? 1.0 : 0.0}},
                   cluster_pair(cp), fn_list, alpha_grid);
}

std::vector<ExperimentTable> cluster_md_sweep(const ClusterParams& base,
                                              std::span<const double> md_values,
                                              std::span<const Alienation> fn_list,
                                              std::span<const double> alpha_grid) {
  std::vector<ExperimentTable> tables;
  for (double md : md_values) {
    ClusterParams cp = base;
    cp.md = md;
    tables.push_back(cluster_concentration_experiment(cp, fn_list, alpha_grid));
  }
  return tables;
}

}  // namespace polarimeter
