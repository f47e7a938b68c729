#include "polarimeter/alienation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polarimeter/error.hpp"

namespace polarimeter {
namespace {

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    fail(ErrorCode::InvalidAlienation,
         std::string(what) + " must be a positive finite number, got " + format_number(v));
  }
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double interpolate(const TabulatedAlienation& t, double d) {
  const auto& pts = t.breakpoints;
  if (d > pts.back().first) {
    fail(ErrorCode::OutOfDomain, "distance " + format_number(d) +
                                     " lies past the last breakpoint " +
                                     format_number(pts.back().first));
  }
  auto hi = std::lower_bound(pts.begin(), pts.end(), d,
                             [](const auto& p, double x) { return p.first < x; });
  if (hi->first == d) return hi->second;
  auto lo = std::prev(hi);
  const double w = (d - lo->first) / (hi->first - lo->first);
  return lo->second + w * (hi->second - lo->second);
}

}  // namespace

Alienation Alienation::linear() { return Alienation(LinearAlienation{}); }

Alienation Alienation::power(double exponent) {
  require_positive(exponent, "power exponent");
  return Alienation(PowerAlienation{exponent});
}

Alienation Alienation::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) {
    fail(ErrorCode::InvalidAlienation, "polynomial needs at least one coefficient");
  }
  bool any_positive = false;
  for (double c : coefficients) {
    if (!std::isfinite(c) || c < 0.0) {
      fail(ErrorCode::InvalidAlienation,
           "polynomial coefficients must be non-negative, got " + format_number(c));
    }
    any_positive = any_positive || c > 0.0;
  }
  if (!any_positive) {
    fail(ErrorCode::InvalidAlienation, "polynomial must have a positive coefficient");
  }
  return Alienation(PolynomialAlienation{std::move(coefficients)});
}

Alienation Alienation::exponential(double rate) {
  require_positive(rate, "exponential rate");
  return Alienation(ExponentialAlienation{rate});
}

Alienation Alienation::tabulated(std::vector<std::pair<double, double>> breakpoints) {
  if (breakpoints.size() < 2) {
    fail(ErrorCode::InvalidAlienation, "a table needs at least 2 breakpoints");
  }
  if (breakpoints.front().first != 0.0 || breakpoints.front().second != 0.0) {
    fail(ErrorCode::InvalidAlienation, "a table must start at (0, 0)");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const auto [d, f] = breakpoints[i];
    if (!std::isfinite(d) || !std::isfinite(f)) {
      fail(ErrorCode::InvalidAlienation, "table entries must be finite");
    }
    if (!(d > breakpoints[i - 1].first)) {
      fail(ErrorCode::InvalidAlienation, "table distances must be strictly increasing");
    }
    if (!(f > 0.0)) {
      fail(ErrorCode::InvalidAlienation,
           "f must be positive at positive distances (d = " + format_number(d) + ")");
    }
  }
  return Alienation(TabulatedAlienation{std::move(breakpoints)});
}

double Alienation::operator()(double d) const {
  if (!(d >= 0.0)) {
    fail(ErrorCode::NegativeDistance, "distance must be >= 0, got " + format_number(d));
  }
  if (d == 0.0) return 0.0;
  return std::visit(
      overloaded{
          [&](const LinearAlienation&) { return d; },
          [&](const PowerAlienation& p) { return std::pow(d, p.exponent); },
          [&](const PolynomialAlienation& p) {
            // Horner on d·(c1 + c2 d + ...).
            double acc = 0.0;
            for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
              acc = acc * d + *it;
            }
            return acc * d;
          },
          [&](const ExponentialAlienation& e) { return std::expm1(e.rate * d); },
          [&](const TabulatedAlienation& t) { return interpolate(t, d); },
      },
      kind_);
}

double Alienation::domain_max() const noexcept {
  if (const auto* t = std::get_if<TabulatedAlienation>(&kind_)) {
    return t->breakpoints.back().first;
  }
  return std::numeric_limits<double>::infinity();
}

std::string Alienation::describe() const {
  return std::visit(
      overloaded{
          [](const LinearAlienation&) { return std::string("linear"); },
          [](const PowerAlienation& p) { return "power:" + format_number(p.exponent); },
          [](const PolynomialAlienation& p) {
            std::string s = "poly:";
            for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
              if (i) s += ',';
              s += format_number(p.coefficients[i]);
            }
            return s;
          },
          [](const ExponentialAlienation& e) { return "exp:" + format_number(e.rate); },
          [](const TabulatedAlienation& t) {
            return "table:" + std::to_string(t.breakpoints.size()) + " points";
          },
      },
      kind_);
}

}  // namespace polarimeter
