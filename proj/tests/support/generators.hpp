#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "polarimeter/alienation.hpp"
#include "polarimeter/distribution.hpp"

namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(real(std::log(lo), std::log(hi))); }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(items.size()) - 1))];
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct RawDistribution {
  std::vector<std::int64_t> pi;
  std::vector<double> y;
  polarimeter::Distribution build() const { return polarimeter::Distribution::from_counts(pi, y); }
};

// n groups, populations in [1, pi_max], positions with gaps in [gap_lo, gap_hi]
// starting from a random origin, shuffled.
inline RawDistribution distribution(Source& s, std::size_t n_max, std::int64_t pi_max,
                                    double gap_lo = 0.1, double gap_hi = 5.0) {
  const auto n = static_cast<std::size_t>(s.integer(2, static_cast<std::int64_t>(n_max)));
  RawDistribution d;
  double pos = s.real(-10.0, 10.0);
  for (std::size_t i = 0; i < n; ++i) {
    d.pi.push_back(s.integer(1, pi_max));
    d.y.push_back(pos);
    pos += s.real(gap_lo, gap_hi);
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), s.engine());
  RawDistribution out;
  for (auto i : order) {
    out.pi.push_back(d.pi[i]);
    out.y.push_back(d.y[i]);
  }
  return out;
}

inline std::vector<polarimeter::Alienation> smooth_alienations() {
  using polarimeter::Alienation;
  return {Alienation::linear(),          Alienation::power(0.5),
          Alienation::power(2.0),        Alienation::power(3.0),
          Alienation::polynomial({1.0, 1.0}), Alienation::exponential(0.3)};
}

}  // namespace gen
