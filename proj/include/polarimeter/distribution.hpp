#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polarimeter {

/// A validated distribution (π, y): n ≥ 2 groups, each with a positive
/// integer head count (population unit u = 1) and a characteristic value,
/// all characteristic values pairwise distinct. Immutable once built.
class Distribution {
 public:
  /// Validates and builds. Throws Error with one of LengthMismatch,
  /// TooFewGroups, NonIntegralPopulation, NonFiniteValue or
  /// DuplicateCharacteristic; `group()` on the error names the offending
  /// entry. Distinctness is exact (bitwise), no tolerance.
  static Distribution validate(std::span<const double> raw_pi,
                               std::span<const double> raw_y);
  static Distribution from_counts(std::span<const std::int64_t> pi,
                                  std::span<const double> y);

  std::span<const std::int64_t> populations() const noexcept { return pi_; }
  std::span<const double> positions() const noexcept { return y_; }
  std::size_t size() const noexcept { return pi_.size(); }
  std::int64_t total_population() const noexcept;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Distribution(std::vector<std::int64_t> pi, std::vector<double> y)
      : pi_(std::move(pi)), y_(std::move(y)) {}

  std::vector<std::int64_t> pi_;
  std::vector<double> y_;
};

inline Distribution validate_distribution(std::span<const double> raw_pi,
                                          std::span<const double> raw_y) {
  return Distribution::validate(raw_pi, raw_y);
}

/// Combines groups whose characteristic values are exactly equal (summing
/// their head counts, keeping first-occurrence order), then validates.
/// Only used when the caller opts in; validate() never merges.
Distribution merge_duplicate_characteristics(std::span<const double> raw_pi,
                                             std::span<const double> raw_y);

/// (λπ, y). Throws NonPositiveLambda for λ < 1.
Distribution scale_population(const Distribution& dist, std::int64_t lambda);

/// Largest pairwise distance |y_i − y_j|.
double max_pairwise_distance(const Distribution& dist) noexcept;

}  // namespace polarimeter
