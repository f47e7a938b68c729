#include "polarimeter/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "polarimeter/error.hpp"

namespace polarimeter {
namespace {

// Head counts stay exactly representable in a double so index arithmetic
// never silently rounds a population.
constexpr double kMaxPopulation = 9007199254740992.0;  // 2^53

void check_shape(std::size_t n_pi, std::size_t n_y) {
  if (n_pi != n_y) {
    fail(ErrorCode::LengthMismatch, "pi has " + std::to_string(n_pi) + " entries, y has " +
                                        std::to_string(n_y));
  }
  if (n_pi < 2) {
    fail(ErrorCode::TooFewGroups,
         "a distribution needs at least 2 groups, got " + std::to_string(n_pi));
  }
}

std::int64_t to_count(double raw, std::size_t i) {
  if (!std::isfinite(raw) || raw < 1.0 || raw > kMaxPopulation || std::floor(raw) != raw) {
    throw Error(ErrorCode::NonIntegralPopulation,
                "group " + std::to_string(i) + " has population " + std::to_string(raw) +
                    "; expected a positive integer",
                i);
  }
  return static_cast<std::int64_t>(raw);
}

void check_positions(std::span<const double> y) {
  std::unordered_map<double, std::size_t> seen;
  seen.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!std::isfinite(y[i])) {
      throw Error(ErrorCode::NonFiniteValue, "group " + std::to_string(i) + " has y = " +
                                                 std::to_string(y[i]), i);
    }
    // +0.0 and -0.0 compare equal and hash alike, which is what we want.
    auto [it, inserted] = seen.emplace(y[i], i);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateCharacteristic,
                  "groups " + std::to_string(it->second) + " and " + std::to_string(i) +
                      " share y = " + std::to_string(y[i]),
                  i);
    }
  }
}

}  // namespace

Distribution Distribution::validate(std::span<const double> raw_pi,
                                    std::span<const double> raw_y) {
  check_shape(raw_pi.size(), raw_y.size());
  std::vector<std::int64_t> pi(raw_pi.size());
  for (std::size_t i = 0; i < raw_pi.size(); ++i) pi[i] = to_count(raw_pi[i], i);
  check_positions(raw_y);
  return Distribution(std::move(pi), std::vector<double>(raw_y.begin(), raw_y.end()));
}

Distribution Distribution::from_counts(std::span<const std::int64_t> pi,
                                       std::span<const double> y) {
  check_shape(pi.size(), y.size());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pi[i] < 1 || static_cast<double>(pi[i]) > kMaxPopulation) {
      throw Error(ErrorCode::NonIntegralPopulation,
                  "group " + std::to_string(i) + " has population " + std::to_string(pi[i]), i);
    }
  }
  check_positions(y);
  return Distribution(std::vector<std::int64_t>(pi.begin(), pi.end()),
                      std::vector<double>(y.begin(), y.end()));
}

std::int64_t Distribution::total_population() const noexcept {
  return std::accumulate(pi_.begin(), pi_.end(), std::int64_t{0});
}

Distribution merge_duplicate_characteristics(std::span<const double> raw_pi,
                                             std::span<const double> raw_y) {
  if (raw_pi.size() != raw_y.size()) {
    fail(ErrorCode::LengthMismatch, "pi has " + std::to_string(raw_pi.size()) +
                                        " entries, y has " + std::to_string(raw_y.size()));
  }
  std::vector<double> pi;
  std::vector<double> y;
  std::unordered_map<double, std::size_t> slot;
  for (std::size_t i = 0; i < raw_y.size(); ++i) {
    auto [it, inserted] = slot.emplace(raw_y[i], y.size());
    if (inserted) {
      pi.push_back(raw_pi[i]);
      y.push_back(raw_y[i]);
    } else {
      // Validate each part before summing so 0.5 + 0.5 cannot sneak through.
      to_count(raw_pi[i], i);
      to_count(pi[it->second], it->second);
      pi[it->second] += raw_pi[i];
    }
  }
  return Distribution::validate(pi, y);
}

Distribution scale_population(const Distribution& dist, std::int64_t lambda) {
  if (lambda < 1) {
    fail(ErrorCode::NonPositiveLambda, "lambda must be >= 1, got " + std::to_string(lambda));
  }
  std::vector<std::int64_t> pi(dist.populations().begin(), dist.populations().end());
  for (auto& p : pi) {
    if (static_cast<double>(p) * static_cast<double>(lambda) > kMaxPopulation) {
      fail(ErrorCode::InvalidArgument, "scaled population exceeds 2^53");
    }
    p *= lambda;
  }
  return Distribution::from_counts(pi, dist.positions());
}

double max_pairwise_distance(const Distribution& dist) noexcept {
  const auto y = dist.positions();
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  return *hi - *lo;
}

}  // namespace polarimeter
