#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polarimeter/antagonism.hpp"
#include "polarimeter/distribution.hpp"

namespace polarimeter {

enum class AxiomId { ConditionH, Axiom1, Axiom2, Axiom3 };
enum class CheckMode { Direct, Characterization };
enum class Verdict { Pass, Fail, PassOnProbedSet };

std::string_view to_string(AxiomId id) noexcept;
std::string_view to_string(CheckMode mode) noexcept;
std::string_view to_string(Verdict verdict) noexcept;

/// One probed configuration. `params` holds the full parameter tuple in a
/// fixed order. For direct checks `before`/`after` are the two
/// distributions and `value_before`/`value_after` their indices (Condition
/// H: the two distributions of the pair, indices after scaling by λ). For
/// characterization checks the values are the two sides of the inequality.
struct Witness {
  std::vector<std::pair<std::string, double>> params;
  std::optional<Distribution> before;
  std::optional<Distribution> after;
  double value_before = 0.0;
  double value_after = 0.0;

  /// Looks up a parameter by name; throws InvalidArgument if absent.
  double param(std::string_view name) const;
};

struct AxiomReport {
  AxiomId axiom = AxiomId::ConditionH;
  CheckMode mode = CheckMode::Direct;
  Verdict verdict = Verdict::PassOnProbedSet;
  std::uint64_t probes = 0;
  std::uint64_t seed = 0;
  /// Violations. Non-empty on Fail except for the Axiom 1 characterization,
  /// whose verdict is the bare sign test α > 0.
  std::vector<Witness> witnesses;
  /// Supporting records: the (ε, q0) found per (p, x) for Axiom 1, the
  /// ratio infimum against M_α for Axiom 3.
  std::vector<Witness> evidence;
  /// Smallest margin (value_after − value_before) seen over all probes.
  std::optional<double> min_margin;
  std::string notes;
};

struct ProbePlan {
  std::int64_t population_min = 1;
  std::int64_t population_max = 50;
  double distance_min = 0.1;
  double distance_max = 10.0;
  std::uint64_t sample_count = 2000;
  std::uint64_t seed = 0;

  /// Throws InvalidPlan when a range is inverted or sample_count is 0.
  void validate() const;
};

/// Condition H on random pairs: if P(d1) ≥ P(d2) then P(λd1) ≥ P(λd2).
/// Always holds for θ = π^α f(d); a Fail means a numerical defect.
AxiomReport check_condition_h(const AntagonismSpec& spec, const ProbePlan& plan = {});

inline constexpr int kEpsilonLadderRungs = 16;
inline constexpr int kBallGridPoints = 9;

/// Axiom 1 (merging two small equal groups near x at their midpoint raises
/// P). For each (p, x) walks ε = x/2, x/4, …, x/2^16 and q0 = p−1, …, 1 and
/// accepts the first (ε, q0) for which every q ≤ q0 and every a < b on a
/// 9×9 grid in B(x, ε) (plus seeded random pairs) satisfies the axiom.
/// Only PassOnProbedSet or Fail: ∀∃ statements are not decidable by search.
AxiomReport check_axiom1_direct(const AntagonismSpec& spec, std::span<const std::int64_t> p_values,
                                std::span<const double> x_values, const ProbePlan& plan = {});

/// Pass iff α > 0.
AxiomReport check_axiom1_characterization(const AntagonismSpec& spec);

/// Axiom 2 on sampled (p > r, q), |y−x| < x < y, Δ ∈ (0, y−x).
/// Half the samples use r = p − 1, where concavity of f is easiest to see.
AxiomReport check_axiom2_direct(const AntagonismSpec& spec, const ProbePlan& plan = {});

/// Midpoint convexity of f on `grid` (default: 1000 points on [0, 10]).
AxiomReport check_axiom2_characterization(const AntagonismSpec& spec,
                                          std::span<const double> grid);
AxiomReport check_axiom2_characterization(const AntagonismSpec& spec);

struct Axiom3Config {
  std::int64_t p;
  std::int64_t q;
  double d;
  std::int64_t delta;
};

/// Throws InvalidConfig unless p ≥ 1, q ≥ 2, d > 0, 1 ≤ Δ and 2Δ < q.
void validate_axiom3_config(const Axiom3Config& config);

/// P((p,q,p),(0,d,2d)) before and P((p+Δ, q−2Δ, p+Δ),(0,d,2d)) after.
std::pair<double, double> axiom3_indices(const AntagonismSpec& spec, const Axiom3Config& config);

/// Seeded configurations with p ∈ [1, 50], q ∈ [3, 50], Δ ∈ [1, ⌈q/2⌉−1],
/// d log-uniform in [0.01, 10].
std::vector<Axiom3Config> default_axiom3_configs(std::uint64_t seed = 0, std::size_t count = 500);

AxiomReport check_axiom3_direct(const AntagonismSpec& spec,
                                std::span<const Axiom3Config> configs);

/// f(2d)/f(d) > g(p, q, α) for every d in d_grid, 1 ≤ p ≤ p_max,
/// 2 ≤ q ≤ q_max. Evidence records inf ratio against max probed g and
/// against the stabilized M_α.
AxiomReport check_axiom3_characterization(const AntagonismSpec& spec, std::int64_t p_max,
                                          std::int64_t q_max, std::span<const double> d_grid);

inline constexpr std::int64_t kDefaultAxiom3PMax = 50;
inline constexpr std::int64_t kDefaultAxiom3QMax = 50;

/// Recomputes a witness from its parameters and reports whether it still
/// shows the recorded violation with the recorded values.
bool replay_witness(const AxiomReport& report, const Witness& witness,
                    const AntagonismSpec& spec);

}  // namespace polarimeter
