#include "polarimeter/antagonism.hpp"

#include <cmath>
#include <string>

#include "polarimeter/error.hpp"

namespace polarimeter {

AntagonismSpec::AntagonismSpec(double alpha, Alienation alienation)
    : alpha_(alpha), alienation_(std::move(alienation)) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    fail(ErrorCode::NegativeAlpha, "alpha must be a finite number >= 0, got " +
                                       std::to_string(alpha));
  }
}

double identification(std::int64_t pi, double alpha) {
  if (pi == 1 || alpha == 0.0) return 1.0;
  return std::pow(static_cast<double>(pi), alpha);
}

double evaluate_theta(const AntagonismSpec& spec, std::int64_t pi, double d) {
  if (pi < 1) fail(ErrorCode::InvalidArgument, "pi must be >= 1, got " + std::to_string(pi));
  const double f = spec.alienation()(d);
  if (f == 0.0) return 0.0;
  return identification(pi, spec.alpha()) * f;
}

}  // namespace polarimeter
