#include "polarimeter/index.hpp"

#include <cmath>
#include <vector>

#include "polarimeter/compensated_sum.hpp"

namespace polarimeter {

double evaluate_index(const Distribution& dist, const AntagonismSpec& spec) {
  const auto pi = dist.populations();
  const auto y = dist.positions();
  const auto& f = spec.alienation();
  const std::size_t n = dist.size();

  std::vector<double> weight(n);
  for (std::size_t i = 0; i < n; ++i) weight[i] = identification(pi[i], spec.alpha());

  CompensatedSum total;
  for (std::size_t i = 0; i < n; ++i) {
    const double pi_i = static_cast<double>(pi[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double pi_j = static_cast<double>(pi[j]);
      total += pi_i * pi_j * (weight[i] + weight[j]) * f(std::fabs(y[i] - y[j]));
    }
  }
  return total.value();
}

double gini_index(const Distribution& dist) {
  static const AntagonismSpec kGini(0.0, Alienation::linear());
  return evaluate_index(dist, kGini);
}

}  // namespace polarimeter
