#pragma once

#include "polarimeter/antagonism.hpp"
#include "polarimeter/distribution.hpp"

namespace polarimeter {

/// P(π, y) = Σ_i Σ_j π_i π_j θ(π_i, |y_i − y_j|) over all ordered pairs.
/// The diagonal vanishes since θ(·, 0) = 0, so each unordered pair {i, j}
/// contributes π_i π_j (π_i^α + π_j^α) f(|y_i − y_j|). Accumulated with
/// compensated summation.
///
/// Note the ordered-pair convention: P((1,1),(0,1)) = 2 for θ(π,d) = d,
/// not 1.
double evaluate_index(const Distribution& dist, const AntagonismSpec& spec);

/// The α = 0, f(d) = d member of the family (unnormalised Gini).
double gini_index(const Distribution& dist);

}  // namespace polarimeter
