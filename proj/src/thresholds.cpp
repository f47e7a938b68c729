#include "polarimeter/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "polarimeter/error.hpp"
#include "polarimeter/parallel.hpp"
#include "polarimeter/shape.hpp"

namespace polarimeter {
namespace {

void check_g_domain(std::int64_t p, std::int64_t q, double alpha) {
  if (p < 1) fail(ErrorCode::DomainError, "g needs p >= 1, got " + std::to_string(p));
  if (q < 2) fail(ErrorCode::DomainError, "g needs q >= 2, got " + std::to_string(q));
  if (!std::isfinite(alpha) || alpha < 0.0) {
    fail(ErrorCode::DomainError, "g needs a finite alpha >= 0, got " + std::to_string(alpha));
  }
}

// Integer axis: every value in [start, dense], then round(dense·2^{k/ppo})
// up to `limit`. Doubling `limit` only appends, so grids are nested.
std::vector<std::int64_t> make_axis(std::int64_t start, std::int64_t limit,
                                    const SupOptions& opt) {
  std::vector<std::int64_t> axis;
  const std::int64_t dense = std::min(opt.dense_limit, limit);
  for (std::int64_t v = start; v <= dense; ++v) axis.push_back(v);
  for (int k = 1;; ++k) {
    const auto v = static_cast<std::int64_t>(
        std::llround(static_cast<double>(opt.dense_limit) *
                     std::exp2(static_cast<double>(k) / opt.points_per_octave)));
    if (v > limit) break;
    if (axis.empty() || v > axis.back()) axis.push_back(v);
  }
  return axis;
}

struct RowBest {
  double value = -std::numeric_limits<double>::infinity();
  std::int64_t q = 2;
  std::uint64_t evaluations = 0;
};

// Best q for one p: scan the q axis, then ternary-search the integers
// between the neighbours of the scanned maximum.
RowBest best_in_row(std::int64_t p, std::span<const std::int64_t> q_axis, double alpha) {
  RowBest best;
  std::size_t best_idx = 0;
  for (std::size_t j = 0; j < q_axis.size(); ++j) {
    const double v = g_value(p, q_axis[j], alpha);
    ++best.evaluations;
    if (v > best.value) {
      best.value = v;
      best.q = q_axis[j];
      best_idx = j;
    }
  }
  std::int64_t lo = q_axis[best_idx > 0 ? best_idx - 1 : 0];
  std::int64_t hi = q_axis[std::min(best_idx + 1, q_axis.size() - 1)];
  auto eval = [&](std::int64_t q) {
    ++best.evaluations;
    return g_value(p, q, alpha);
  };
  while (hi - lo > 2) {
    const std::int64_t m1 = lo + (hi - lo) / 3;
    const std::int64_t m2 = hi - (hi - lo) / 3;
    if (eval(m1) < eval(m2)) {
      lo = m1 + 1;
    } else {
      hi = m2 - 1;
    }
  }
  for (std::int64_t q = lo; q <= hi; ++q) {
    const double v = eval(q);
    if (v > best.value || (v == best.value && q < best.q)) {
      best.value = v;
      best.q = q;
    }
  }
  return best;
}

void check_sup_args(double alpha, double tolerance, const SupOptions& opt) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    fail(ErrorCode::DomainError, "sup_g needs a finite alpha >= 0");
  }
  if (!(tolerance > 0.0)) fail(ErrorCode::InvalidArgument, "sup_g needs tolerance > 0");
  if (opt.initial.p_max < 1 || opt.initial.q_max < 2 || opt.points_per_octave < 1 ||
      opt.dense_limit < 2) {
    fail(ErrorCode::InvalidArgument, "invalid sup_g grid options");
  }
}

}  // namespace

namespace detail {

double g_direct(std::int64_t p, std::int64_t q, double alpha) {
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  const double p1 = pd + 1.0;
  const double q2 = qd - 2.0;
  const double a1 = alpha + 1.0;
  // q = 2 zeroes both (q−2) terms; pow(0, a1) is 0 for a1 ≥ 1 anyway.
  const double shrink = q == 2 ? 0.0 : std::pow(p1, a1) * q2 + p1 * std::pow(q2, a1);
  const double num = std::pow(pd, a1) * qd + pd * std::pow(qd, a1) - shrink;
  const double den = std::pow(p1, alpha + 2.0) - std::pow(pd, alpha + 2.0);
  return num / den;
}

double g_scaled(std::int64_t p, std::int64_t q, double alpha) {
  // With t = q/p, s = (q−2)/p and L = log(1 + 1/p), after dividing by p^{α+2}:
  //   num = −t·expm1((α+1)L) + (2/p)·e^{(α+1)L}
  //         − t^{α+1}·expm1((α+1)·log1p(−2/q)) − s^{α+1}/p
  //   den = expm1((α+2)L)
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  const double a1 = alpha + 1.0;
  const double inv_p = 1.0 / pd;
  const double L = std::log1p(inv_p);
  const double t = qd / pd;
  const double s = (qd - 2.0) / pd;
  const double ta1 = std::pow(t, a1);
  const double sa1 = q == 2 ? 0.0 : std::pow(s, a1);
  const double tail = q == 2 ? -1.0 : std::expm1(a1 * std::log1p(-2.0 / qd));
  const double num = -t * std::expm1(a1 * L) + 2.0 * inv_p * std::exp(a1 * L) - ta1 * tail -
                     sa1 * inv_p;
  const double den = std::expm1((alpha + 2.0) * L);
  return num / den;
}

}  // namespace detail

double g_value(std::int64_t p, std::int64_t q, double alpha) {
  check_g_domain(p, q, alpha);
  return p < detail::kScaledFormulaFrom ? detail::g_direct(p, q, alpha)
                                        : detail::g_scaled(p, q, alpha);
}

double g_q2_ray_limit(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    fail(ErrorCode::DomainError, "ray limit needs a finite alpha >= 0");
  }
  return alpha == 0.0 ? 2.0 : 2.0 / (alpha + 2.0);
}

SupEstimate max_g_on_grid(double alpha, GridLimits limits, const SupOptions& options) {
  check_sup_args(alpha, 1.0, options);
  const auto p_axis = make_axis(1, limits.p_max, options);
  const auto q_axis = make_axis(2, limits.q_max, options);

  const auto rows = parallel_map<RowBest>(
      p_axis.size(), [&](std::size_t i) { return best_in_row(p_axis[i], q_axis, alpha); });

  SupEstimate est;
  est.alpha = alpha;
  est.grid_limits = limits;
  est.value = -std::numeric_limits<double>::infinity();
  // Ascending p with strict '>' keeps the smallest (p, q) on ties.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    est.evaluations += rows[i].evaluations;
    if (rows[i].value > est.value) {
      est.value = rows[i].value;
      est.argmax = {p_axis[i], rows[i].q};
    }
  }
  const double ray = g_q2_ray_limit(alpha);
  if (ray > est.value) {
    est.value = ray;
    est.argmax = {limits.p_max, 2};
    est.from_ray_limit = true;
  }
  est.history.push_back(est.value);
  return est;
}

SupEstimate sup_g(double alpha, double tolerance, const SupOptions& options) {
  check_sup_args(alpha, tolerance, options);
  GridLimits limits = options.initial;
  SupEstimate best = max_g_on_grid(alpha, limits, options);
  std::vector<double> history = best.history;
  std::uint64_t evaluations = best.evaluations;

  while (true) {
    limits.p_max *= 2;
    limits.q_max *= 2;
    if (limits.p_max > options.max_p) {
      fail(ErrorCode::NotStabilized,
           "sup of g at alpha=" + std::to_string(alpha) + " still moving by " +
               std::to_string(best.last_change) + " at p_max=" +
               std::to_string(limits.p_max / 2) + "; raise the grid limit");
    }
    SupEstimate next = max_g_on_grid(alpha, limits, options);
    evaluations += next.evaluations;
    const double previous = best.value;
    if (next.value > best.value) {
      best.value = next.value;
      best.argmax = next.argmax;
      best.from_ray_limit = next.from_ray_limit;
    }
    best.grid_limits = limits;
    best.last_change = best.value - previous;
    history.push_back(best.value);
    if (best.last_change < tolerance * std::max(1.0, std::fabs(best.value))) {
      best.stabilized = true;
      break;
    }
  }
  best.history = std::move(history);
  best.evaluations = evaluations;
  return best;
}

ThresholdEstimate critical_alpha(double bound, double tolerance,
                                 std::pair<double, double> alpha_range, double sup_tolerance,
                                 const SupOptions& options) {
  if (!(bound > 0.0) || !std::isfinite(bound)) {
    fail(ErrorCode::InvalidArgument, "bound must be a positive finite number");
  }
  if (!(tolerance > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be > 0");
  auto [lo, hi] = alpha_range;
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    fail(ErrorCode::InvalidArgument, "alpha range must satisfy 0 <= lo < hi");
  }

  ThresholdEstimate out;
  out.bound = bound;
  out.tolerance = tolerance;
  auto m_alpha = [&](double alpha) {
    const SupEstimate s = sup_g(alpha, sup_tolerance, options);
    out.m_alpha_samples.emplace_back(alpha, s.value);
    if (s.grid_limits.p_max > out.grid_limits.p_max) out.grid_limits = s.grid_limits;
    return s.value;
  };

  const double m_lo = m_alpha(lo);
  const double m_hi = m_alpha(hi);
  if (!(m_lo < bound && bound <= m_hi)) {
    fail(ErrorCode::NoSignChange, "M_alpha does not cross " + std::to_string(bound) +
                                      " on [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]: M_lo=" + std::to_string(m_lo) +
                                      ", M_hi=" + std::to_string(m_hi));
  }

  while (hi - lo > tolerance && out.iterations < kMaxBisectionIterations) {
    const double mid = 0.5 * (lo + hi);
    if (m_alpha(mid) < bound) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++out.iterations;
  }
  out.bracket = {lo, hi};
  out.alpha_critical = 0.5 * (lo + hi);
  std::sort(out.m_alpha_samples.begin(), out.m_alpha_samples.end());
  return out;
}

double ratio_infimum(const Alienation& fn, std::span<const double> d_grid) {
  if (d_grid.empty()) fail(ErrorCode::DomainError, "ratio_infimum needs a non-empty grid");
  double best = std::numeric_limits<double>::infinity();
  for (double d : d_grid) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      fail(ErrorCode::DomainError, "ratio grid distances must be positive and finite");
    }
    if (2.0 * d > fn.domain_max()) {
      fail(ErrorCode::DomainError, "f is not defined at 2d = " + std::to_string(2.0 * d));
    }
    best = std::min(best, fn(2.0 * d) / fn(d));
  }
  return best;
}

std::vector<double> default_ratio_grid(const Alienation& fn, std::size_t points) {
  if (points < 2) fail(ErrorCode::InvalidArgument, "ratio grid needs >= 2 points");
  const double lo = 1e-3;
  const double hi = std::min(1e2, 0.5 * fn.domain_max());
  if (!(hi > lo)) fail(ErrorCode::DomainError, "function domain too short for a ratio grid");
  std::vector<double> grid(points);
  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo * std::exp(step * static_cast<double>(i));
  grid.back() = hi;
  return grid;
}

ThresholdEstimate feasible_alpha_interval(const Alienation& fn, double tolerance,
                                          double sup_tolerance) {
  const auto shape_grid = default_shape_grid(fn);
  if (const auto mono = is_nondecreasing(fn, shape_grid); !mono.nondecreasing) {
    fail(ErrorCode::InvalidArgument, "feasible_alpha_interval needs a non-decreasing f");
  }
  if (const auto convex = is_midpoint_convex(fn, shape_grid); !convex.convex) {
    fail(ErrorCode::InvalidArgument, "feasible_alpha_interval needs a convex f");
  }
  const auto ratio_grid = default_ratio_grid(fn);
  const double bound = ratio_infimum(fn, ratio_grid);
  return critical_alpha(bound, tolerance, kDefaultAlphaRange, sup_tolerance);
}

void write_m_alpha_csv(std::ostream& out, std::span<const std::pair<double, double>> samples) {
  const auto old_precision = out.precision(17);
  out << "alpha,m_alpha\n";
  for (const auto& [alpha, m] : samples) out << alpha << ',' << m << '\n';
  out.precision(old_precision);
}

}  // namespace polarimeter
