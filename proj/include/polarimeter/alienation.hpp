#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polarimeter {

struct LinearAlienation {
  friend bool operator==(const LinearAlienation&, const LinearAlienation&) = default;
};
struct PowerAlienation {
  double exponent;
  friend bool operator==(const PowerAlienation&, const PowerAlienation&) = default;
};
/// f(d) = Σ_k c_k d^k, k ≥ 1 (coefficients[0] multiplies d).
struct PolynomialAlienation {
  std::vector<double> coefficients;
  friend bool operator==(const PolynomialAlienation&, const PolynomialAlienation&) = default;
};
/// f(d) = e^{k d} − 1.
struct ExponentialAlienation {
  double rate;
  friend bool operator==(const ExponentialAlienation&, const ExponentialAlienation&) = default;
};
/// Piecewise-linear through (d, f(d)) breakpoints starting at (0, 0);
/// undefined past the last breakpoint.
struct TabulatedAlienation {
  std::vector<std::pair<double, double>> breakpoints;
  friend bool operator==(const TabulatedAlienation&, const TabulatedAlienation&) = default;
};

/// The distance factor f of θ(π, d) = π^α f(d). Always f(0) = 0. The
/// factories check parameter ranges; monotonicity and convexity are
/// properties to test (see shape.hpp), not construction requirements.
class Alienation {
 public:
  using Kind = std::variant<LinearAlienation, PowerAlienation, PolynomialAlienation,
                            ExponentialAlienation, TabulatedAlienation>;

  static Alienation linear();
  static Alienation power(double exponent);
  static Alienation polynomial(std::vector<double> coefficients);
  static Alienation exponential(double rate);
  static Alienation tabulated(std::vector<std::pair<double, double>> breakpoints);

  /// f(d). Throws NegativeDistance for d < 0 (or NaN) and OutOfDomain past
  /// the last breakpoint of a tabulated function.
  double operator()(double d) const;

  /// Largest admissible distance (+inf except for tabulated functions).
  double domain_max() const noexcept;

  /// Descriptor in the CLI grammar (`linear`, `power:2`, `poly:1,1`,
  /// `exp:0.5`); tabulated functions render as `table:<n points>`.
  std::string describe() const;

  const Kind& kind() const noexcept { return kind_; }

  friend bool operator==(const Alienation&, const Alienation&) = default;

 private:
  explicit Alienation(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

inline double evaluate_alienation(const Alienation& fn, double d) { return fn(d); }

}  // namespace polarimeter
