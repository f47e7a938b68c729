#pragma once

#include <cstdint>

#include "polarimeter/alienation.hpp"

namespace polarimeter {

/// θ(π, d) = π^α f(d), the only antagonism form compatible with
/// Condition H. α ≥ 0 is the identification exponent.
class AntagonismSpec {
 public:
  /// Throws NegativeAlpha for α < 0 or non-finite α.
  AntagonismSpec(double alpha, Alienation alienation);

  double alpha() const noexcept { return alpha_; }
  const Alienation& alienation() const noexcept { return alienation_; }

  friend bool operator==(const AntagonismSpec&, const AntagonismSpec&) = default;

 private:
  double alpha_;
  Alienation alienation_;
};

/// π^α. Exactly 1 for π = 1 or α = 0.
double identification(std::int64_t pi, double alpha);

/// θ(π, d); exactly 0 at d = 0. Throws InvalidArgument for π < 1.
double evaluate_theta(const AntagonismSpec& spec, std::int64_t pi, double d);

}  // namespace polarimeter
