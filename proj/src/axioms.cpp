#include "polarimeter/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "polarimeter/error.hpp"
#include "polarimeter/index.hpp"
#include "polarimeter/parallel.hpp"
#include "polarimeter/shape.hpp"
#include "polarimeter/thresholds.hpp"

namespace polarimeter {
namespace {

Distribution make(std::initializer_list<std::int64_t> pi, std::initializer_list<double> y) {
  return Distribution::from_counts(std::vector<std::int64_t>(pi), std::vector<double>(y));
}

void note_margin(AxiomReport& report, double margin) {
  if (!report.min_margin || margin < *report.min_margin) report.min_margin = margin;
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  if (lo == hi) return lo;
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// --- Condition H --------------------------------------------------------

Distribution random_distribution(std::mt19937_64& rng, const ProbePlan& plan) {
  const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 6));
  std::vector<std::int64_t> pi(n);
  std::vector<double> y(n);
  double pos = uniform_real(rng, -plan.distance_max, plan.distance_max);
  for (std::size_t i = 0; i < n; ++i) {
    pi[i] = uniform_int(rng, plan.population_min, plan.population_max);
    y[i] = pos;
    pos += uniform_real(rng, plan.distance_min, plan.distance_max);
  }
  return Distribution::from_counts(pi, y);
}

struct HProbe {
  Distribution first;
  Distribution second;
  std::int64_t lambda;
};

struct HOutcome {
  double p_first = 0.0;
  double p_second = 0.0;
  double scaled_first = 0.0;
  double scaled_second = 0.0;
};

// --- Axiom 1 ------------------------------------------------------------

struct Axiom1Eval {
  double before;
  double after;
};

Axiom1Eval axiom1_indices(const AntagonismSpec& spec, std::int64_t p, std::int64_t q, double a,
                          double b) {
  return {evaluate_index(make({p, q, q}, {0.0, a, b}), spec),
          evaluate_index(make({p, 2 * q}, {0.0, 0.5 * (a + b)}), spec)};
}

Witness axiom1_witness(const AntagonismSpec& spec, std::int64_t p, double x, double eps,
                       std::int64_t q0, std::int64_t q, double a, double b) {
  Witness w;
  w.params = {{"p", static_cast<double>(p)}, {"x", x}, {"epsilon", eps},
              {"q0", static_cast<double>(q0)}, {"q", static_cast<double>(q)},
              {"a", a}, {"b", b}};
  w.before = make({p, q, q}, {0.0, a, b});
  w.after = make({p, 2 * q}, {0.0, 0.5 * (a + b)});
  w.value_before = evaluate_index(*w.before, spec);
  w.value_after = evaluate_index(*w.after, spec);
  return w;
}

// (a, b) pairs with a < b inside the open ball B(x, ε).
std::vector<std::pair<double, double>> ball_pairs(double x, double eps, std::mt19937_64& rng,
                                                  std::uint64_t extra) {
  std::array<double, kBallGridPoints> pts{};
  for (int i = 0; i < kBallGridPoints; ++i) {
    pts[i] = x - eps + 2.0 * eps * (i + 1) / (kBallGridPoints + 1);
  }
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i < kBallGridPoints; ++i) {
    for (int j = i + 1; j < kBallGridPoints; ++j) pairs.emplace_back(pts[i], pts[j]);
  }
  for (std::uint64_t k = 0; k < extra; ++k) {
    double a = uniform_real(rng, x - eps, x + eps);
    double b = uniform_real(rng, x - eps, x + eps);
    if (a == b || a == x - eps || b == x - eps) continue;
    if (a > b) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  return pairs;
}

// --- Axiom 2 ------------------------------------------------------------

struct Axiom2Probe {
  std::int64_t p, q, r;
  double x, y, delta;
};

Witness axiom2_witness(const AntagonismSpec& spec, const Axiom2Probe& s) {
  Witness w;
  w.params = {{"p", static_cast<double>(s.p)}, {"q", static_cast<double>(s.q)},
              {"r", static_cast<double>(s.r)}, {"x", s.x}, {"y", s.y}, {"delta", s.delta}};
  w.before = make({s.p, s.q, s.r}, {0.0, s.x, s.y});
  w.after = make({s.p, s.q, s.r}, {0.0, s.x + s.delta, s.y});
  w.value_before = evaluate_index(*w.before, spec);
  w.value_after = evaluate_index(*w.after, spec);
  return w;
}

Witness axiom3_witness(const AntagonismSpec& spec, const Axiom3Config& c) {
  Witness w;
  w.params = {{"p", static_cast<double>(c.p)}, {"q", static_cast<double>(c.q)}, {"d", c.d},
              {"delta", static_cast<double>(c.delta)}};
  w.before = make({c.p, c.q, c.p}, {0.0, c.d, 2.0 * c.d});
  w.after = make({c.p + c.delta, c.q - 2 * c.delta, c.p + c.delta}, {0.0, c.d, 2.0 * c.d});
  w.value_before = evaluate_index(*w.before, spec);
  w.value_after = evaluate_index(*w.after, spec);
  return w;
}

std::string describe_spec(const AntagonismSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << "alpha=" << spec.alpha() << ", f=" << spec.alienation().describe();
  return os.str();
}

}  // namespace

std::string_view to_string(AxiomId id) noexcept {
  switch (id) {
    case AxiomId::ConditionH: return "ConditionH";
    case AxiomId::Axiom1: return "Axiom1";
    case AxiomId::Axiom2: return "Axiom2";
    case AxiomId::Axiom3: return "Axiom3";
  }
  return "Unknown";
}

std::string_view to_string(CheckMode mode) noexcept {
  return mode == CheckMode::Direct ? "Direct" : "Characterization";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::PassOnProbedSet: return "PassOnProbedSet";
  }
  return "Unknown";
}

double Witness::param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  fail(ErrorCode::InvalidArgument, "witness has no parameter '" + std::string(name) + "'");
}

void ProbePlan::validate() const {
  if (population_min < 1 || population_min > population_max) {
    fail(ErrorCode::InvalidPlan, "population range must satisfy 1 <= min <= max");
  }
  if (!(distance_min > 0.0) || !(distance_min <= distance_max) || !std::isfinite(distance_max)) {
    fail(ErrorCode::InvalidPlan, "distance range must satisfy 0 < min <= max");
  }
  if (sample_count < 1) fail(ErrorCode::InvalidPlan, "sample_count must be >= 1");
}

AxiomReport check_condition_h(const AntagonismSpec& spec, const ProbePlan& plan) {
  plan.validate();
  AxiomReport report;
  report.axiom = AxiomId::ConditionH;
  report.mode = CheckMode::Direct;
  report.seed = plan.seed;

  std::mt19937_64 rng(plan.seed);
  std::vector<HProbe> probes;
  probes.reserve(plan.sample_count);
  for (std::uint64_t s = 0; s < plan.sample_count; ++s) {
    Distribution a = random_distribution(rng, plan);
    Distribution b = random_distribution(rng, plan);
    // Every tenth probe is the identity homothecy.
    const std::int64_t lambda = s % 10 == 0 ? 1 : uniform_int(rng, 2, 50);
    probes.push_back({std::move(a), std::move(b), lambda});
  }

  const auto outcomes = parallel_map<HOutcome>(probes.size(), [&](std::size_t i) {
    const auto& pr = probes[i];
    return HOutcome{evaluate_index(pr.first, spec), evaluate_index(pr.second, spec),
                    evaluate_index(scale_population(pr.first, pr.lambda), spec),
                    evaluate_index(scale_population(pr.second, pr.lambda), spec)};
  });

  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto& o = outcomes[i];
    const bool first_higher = o.p_first >= o.p_second;
    const Distribution& hi = first_higher ? probes[i].first : probes[i].second;
    const Distribution& lo = first_higher ? probes[i].second : probes[i].first;
    const double scaled_hi = first_higher ? o.scaled_first : o.scaled_second;
    const double scaled_lo = first_higher ? o.scaled_second : o.scaled_first;
    ++report.probes;
    note_margin(report, scaled_hi - scaled_lo);
    if (scaled_hi < scaled_lo) {
      Witness w;
      w.params = {{"lambda", static_cast<double>(probes[i].lambda)},
                  {"p_higher", std::max(o.p_first, o.p_second)},
                  {"p_lower", std::min(o.p_first, o.p_second)}};
      w.before = hi;
      w.after = lo;
      w.value_before = scaled_hi;
      w.value_after = scaled_lo;
      report.witnesses.push_back(std::move(w));
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::PassOnProbedSet : Verdict::Fail;
  report.notes = describe_spec(spec) + "; random pairs with n in [2,6], lambda in [1,50]";
  return report;
}

AxiomReport check_axiom1_direct(const AntagonismSpec& spec, std::span<const std::int64_t> p_values,
                                std::span<const double> x_values, const ProbePlan& plan) {
  if (p_values.empty() || x_values.empty()) {
    fail(ErrorCode::EmptyProbeLists, "Axiom 1 needs at least one p and one x");
  }
  plan.validate();
  for (auto p : p_values) {
    if (p <= 1) fail(ErrorCode::InvalidArgument, "Axiom 1 needs p > 1, got " + std::to_string(p));
  }
  for (double x : x_values) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      fail(ErrorCode::InvalidArgument, "Axiom 1 needs x > 0");
    }
  }

  AxiomReport report;
  report.axiom = AxiomId::Axiom1;
  report.mode = CheckMode::Direct;
  report.seed = plan.seed;
  std::mt19937_64 rng(plan.seed);
  const std::uint64_t extra = std::min<std::uint64_t>(plan.sample_count, 32);

  for (auto p : p_values) {
    for (double x : x_values) {
      bool found = false;
      std::optional<Witness> refutation;
      for (int rung = 1; rung <= kEpsilonLadderRungs && !found; ++rung) {
        const double eps = x / std::exp2(rung);
        const auto pairs = ball_pairs(x, eps, rng, extra);
        for (std::int64_t q0 = p - 1; q0 >= 1 && !found; --q0) {
          bool holds = true;
          for (std::int64_t q = 1; q <= q0 && holds; ++q) {
            for (const auto& [a, b] : pairs) {
              const auto ev = axiom1_indices(spec, p, q, a, b);
              ++report.probes;
              note_margin(report, ev.after - ev.before);
              if (!(ev.after > ev.before)) {
                holds = false;
                if (q0 == 1) refutation = axiom1_witness(spec, p, x, eps, q0, q, a, b);
                break;
              }
            }
          }
          if (holds) {
            found = true;
            Witness ok;
            ok.params = {{"p", static_cast<double>(p)}, {"x", x}, {"epsilon", eps},
                         {"q0", static_cast<double>(q0)}};
            report.evidence.push_back(std::move(ok));
          }
        }
      }
      if (!found && refutation) report.witnesses.push_back(std::move(*refutation));
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::PassOnProbedSet : Verdict::Fail;
  report.notes = describe_spec(spec) +
                 "; epsilon ladder x/2..x/2^16, 9x9 grid plus seeded pairs in B(x,eps), a<b only. "
                 "Certainty comes only from the characterization (alpha > 0).";
  return report;
}

AxiomReport check_axiom1_characterization(const AntagonismSpec& spec) {
  AxiomReport report;
  report.axiom = AxiomId::Axiom1;
  report.mode = CheckMode::Characterization;
  report.probes = 1;
  report.verdict = spec.alpha() > 0.0 ? Verdict::Pass : Verdict::Fail;
  report.notes = describe_spec(spec) + "; Axiom 1 holds iff alpha > 0";
  return report;
}

AxiomReport check_axiom2_direct(const AntagonismSpec& spec, const ProbePlan& plan) {
  plan.validate();
  if (plan.population_max < 2 || plan.population_max == plan.population_min) {
    fail(ErrorCode::InvalidPlan, "Axiom 2 needs room for p > r in the population range");
  }
  AxiomReport report;
  report.axiom = AxiomId::Axiom2;
  report.mode = CheckMode::Direct;
  report.seed = plan.seed;

  std::mt19937_64 rng(plan.seed);
  std::vector<Axiom2Probe> probes;
  probes.reserve(plan.sample_count);
  for (std::uint64_t s = 0; s < plan.sample_count; ++s) {
    Axiom2Probe pr{};
    pr.p = uniform_int(rng, std::max<std::int64_t>(plan.population_min + 1, 2), plan.population_max);
    pr.r = s % 2 == 0 ? pr.p - 1 : uniform_int(rng, plan.population_min, pr.p - 1);
    pr.q = uniform_int(rng, plan.population_min, plan.population_max);
    pr.x = uniform_real(rng, plan.distance_min, plan.distance_max);
    const double gap = pr.x * uniform_real(rng, 0.02, 0.98);  // y − x ∈ (0, x)
    pr.y = pr.x + gap;
    pr.delta = gap * uniform_real(rng, 0.02, 0.98);
    probes.push_back(pr);
  }

  const auto values = parallel_map<std::pair<double, double>>(probes.size(), [&](std::size_t i) {
    const auto& s = probes[i];
    return std::pair{evaluate_index(make({s.p, s.q, s.r}, {0.0, s.x, s.y}), spec),
                     evaluate_index(make({s.p, s.q, s.r}, {0.0, s.x + s.delta, s.y}), spec)};
  });

  for (std::size_t i = 0; i < probes.size(); ++i) {
    ++report.probes;
    note_margin(report, values[i].second - values[i].first);
    if (!(values[i].second > values[i].first)) {
      report.witnesses.push_back(axiom2_witness(spec, probes[i]));
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::PassOnProbedSet : Verdict::Fail;
  report.notes = describe_spec(spec) + "; Axiom 2 holds iff f is convex";
  return report;
}

AxiomReport check_axiom2_characterization(const AntagonismSpec& spec,
                                          std::span<const double> grid) {
  const auto result = is_midpoint_convex(spec.alienation(), grid);
  AxiomReport report;
  report.axiom = AxiomId::Axiom2;
  report.mode = CheckMode::Characterization;
  report.probes = result.pairs_checked;
  report.verdict = result.convex ? Verdict::Pass : Verdict::Fail;
  if (result.witness) {
    const auto& cw = *result.witness;
    Witness w;
    w.params = {{"a", cw.a}, {"b", cw.b}, {"tolerance", kShapeTolerance}};
    w.value_before = cw.f_mid;
    w.value_after = cw.chord;
    report.witnesses.push_back(std::move(w));
    report.min_margin = -cw.margin;
  }
  report.notes = describe_spec(spec) + "; sampled midpoint convexity on " +
                 std::to_string(grid.size()) + " points, tolerance 1e-9";
  return report;
}

AxiomReport check_axiom2_characterization(const AntagonismSpec& spec) {
  const auto grid = default_shape_grid(spec.alienation());
  return check_axiom2_characterization(spec, grid);
}

void validate_axiom3_config(const Axiom3Config& c) {
  if (c.p < 1 || c.q < 2 || !(c.d > 0.0) || !std::isfinite(c.d) || c.delta < 1 ||
      2 * c.delta >= c.q) {
    fail(ErrorCode::InvalidConfig, "Axiom 3 needs p >= 1, q >= 2, d > 0, 1 <= delta < q/2 (got p=" +
                                       std::to_string(c.p) + ", q=" + std::to_string(c.q) +
                                       ", delta=" + std::to_string(c.delta) + ")");
  }
}

std::pair<double, double> axiom3_indices(const AntagonismSpec& spec, const Axiom3Config& c) {
  validate_axiom3_config(c);
  return {evaluate_index(make({c.p, c.q, c.p}, {0.0, c.d, 2.0 * c.d}), spec),
          evaluate_index(make({c.p + c.delta, c.q - 2 * c.delta, c.p + c.delta},
                              {0.0, c.d, 2.0 * c.d}),
                         spec)};
}

std::vector<Axiom3Config> default_axiom3_configs(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Axiom3Config> configs;
  configs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Axiom3Config c{};
    c.p = uniform_int(rng, 1, 50);
    c.q = uniform_int(rng, 3, 50);
    c.delta = uniform_int(rng, 1, (c.q - 1) / 2);
    c.d = std::exp(uniform_real(rng, std::log(0.01), std::log(10.0)));
    configs.push_back(c);
  }
  return configs;
}

AxiomReport check_axiom3_direct(const AntagonismSpec& spec,
                                std::span<const Axiom3Config> configs) {
  for (const auto& c : configs) validate_axiom3_config(c);
  AxiomReport report;
  report.axiom = AxiomId::Axiom3;
  report.mode = CheckMode::Direct;

  const auto values = parallel_map<std::pair<double, double>>(
      configs.size(), [&](std::size_t i) { return axiom3_indices(spec, configs[i]); });
  for (std::size_t i = 0; i < configs.size(); ++i) {
    ++report.probes;
    note_margin(report, values[i].second - values[i].first);
    if (!(values[i].second > values[i].first)) {
      report.witnesses.push_back(axiom3_witness(spec, configs[i]));
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::PassOnProbedSet : Verdict::Fail;
  report.notes = describe_spec(spec) + "; symmetric configuration y = (0, d, 2d)";
  return report;
}

AxiomReport check_axiom3_characterization(const AntagonismSpec& spec, std::int64_t p_max,
                                          std::int64_t q_max, std::span<const double> d_grid) {
  if (p_max < 1 || q_max < 2) {
    fail(ErrorCode::InvalidArgument, "Axiom 3 characterization needs p_max >= 1, q_max >= 2");
  }
  const auto& f = spec.alienation();
  const double ratio_inf = ratio_infimum(f, d_grid);
  double d_at_inf = d_grid.front();
  for (double d : d_grid) {
    if (f(2.0 * d) / f(d) == ratio_inf) {
      d_at_inf = d;
      break;
    }
  }

  struct RowMax {
    double g = -std::numeric_limits<double>::infinity();
    std::int64_t q = 2;
  };
  const auto rows = parallel_map<RowMax>(static_cast<std::size_t>(p_max), [&](std::size_t i) {
    RowMax best;
    const auto p = static_cast<std::int64_t>(i) + 1;
    for (std::int64_t q = 2; q <= q_max; ++q) {
      const double g = g_value(p, q, spec.alpha());
      if (g > best.g) best = {g, q};
    }
    return best;
  });
  double g_max = -std::numeric_limits<double>::infinity();
  std::int64_t p_arg = 1;
  std::int64_t q_arg = 2;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].g > g_max) {
      g_max = rows[i].g;
      p_arg = static_cast<std::int64_t>(i) + 1;
      q_arg = rows[i].q;
    }
  }

  AxiomReport report;
  report.axiom = AxiomId::Axiom3;
  report.mode = CheckMode::Characterization;
  report.probes = static_cast<std::uint64_t>(d_grid.size()) * static_cast<std::uint64_t>(p_max) *
                  static_cast<std::uint64_t>(q_max - 1);
  report.min_margin = ratio_inf - g_max;
  report.verdict = ratio_inf > g_max ? Verdict::PassOnProbedSet : Verdict::Fail;
  if (report.verdict == Verdict::Fail) {
    Witness w;
    w.params = {{"p", static_cast<double>(p_arg)}, {"q", static_cast<double>(q_arg)},
                {"d", d_at_inf}, {"alpha", spec.alpha()}};
    w.value_before = g_max;
    w.value_after = ratio_inf;
    report.witnesses.push_back(std::move(w));
  }

  Witness sup;
  sup.params = {{"alpha", spec.alpha()}, {"ratio_infimum", ratio_inf}, {"max_probed_g", g_max},
                {"p_max", static_cast<double>(p_max)}, {"q_max", static_cast<double>(q_max)}};
  std::ostringstream note;
  note.precision(17);
  note << describe_spec(spec) << "; inf f(2d)/f(d) = " << ratio_inf << " vs max probed g = "
       << g_max;
  try {
    const SupEstimate m = sup_g(spec.alpha(), kDefaultSupTolerance);
    const double tol = kDefaultSupTolerance * std::max(1.0, m.value);
    sup.params.emplace_back("m_alpha", m.value);
    sup.params.emplace_back("margin_vs_m_alpha", ratio_inf - m.value);
    sup.params.emplace_back("meets_sup_bound", ratio_inf >= m.value - tol ? 1.0 : 0.0);
    sup.value_before = m.value;
    note << "; M_alpha = " << m.value;
  } catch (const Error& e) {
    note << "; M_alpha unavailable: " << e.what();
  }
  sup.value_after = ratio_inf;
  report.evidence.push_back(std::move(sup));
  report.notes = note.str();
  return report;
}

bool replay_witness(const AxiomReport& report, const Witness& w, const AntagonismSpec& spec) {
  const auto same = [](double a, double b) { return a == b; };
  switch (report.axiom) {
    case AxiomId::ConditionH: {
      if (!w.before || !w.after) return false;
      const auto lambda = static_cast<std::int64_t>(w.param("lambda"));
      const double hi = evaluate_index(*w.before, spec);
      const double lo = evaluate_index(*w.after, spec);
      const double shi = evaluate_index(scale_population(*w.before, lambda), spec);
      const double slo = evaluate_index(scale_population(*w.after, lambda), spec);
      return hi >= lo && shi < slo && same(shi, w.value_before) && same(slo, w.value_after);
    }
    case AxiomId::Axiom1: {
      const auto p = static_cast<std::int64_t>(w.param("p"));
      const auto q = static_cast<std::int64_t>(w.param("q"));
      const auto ev = axiom1_indices(spec, p, q, w.param("a"), w.param("b"));
      return !(ev.after > ev.before) && same(ev.before, w.value_before) &&
             same(ev.after, w.value_after);
    }
    case AxiomId::Axiom2: {
      if (report.mode == CheckMode::Characterization) {
        const auto& f = spec.alienation();
        const double a = w.param("a");
        const double b = w.param("b");
        const double f_mid = f(0.5 * (a + b));
        const double chord = 0.5 * (f(a) + f(b));
        return f_mid - chord > w.param("tolerance") && same(f_mid, w.value_before) &&
               same(chord, w.value_after);
      }
      const Axiom2Probe s{static_cast<std::int64_t>(w.param("p")),
                          static_cast<std::int64_t>(w.param("q")),
                          static_cast<std::int64_t>(w.param("r")), w.param("x"), w.param("y"),
                          w.param("delta")};
      const Witness fresh = axiom2_witness(spec, s);
      return !(fresh.value_after > fresh.value_before) &&
             same(fresh.value_before, w.value_before) && same(fresh.value_after, w.value_after);
    }
    case AxiomId::Axiom3: {
      if (report.mode == CheckMode::Characterization) {
        const auto& f = spec.alienation();
        const double d = w.param("d");
        const double ratio = f(2.0 * d) / f(d);
        const double g = g_value(static_cast<std::int64_t>(w.param("p")),
                                 static_cast<std::int64_t>(w.param("q")), spec.alpha());
        return !(ratio > g) && same(g, w.value_before) && same(ratio, w.value_after);
      }
      const Axiom3Config c{static_cast<std::int64_t>(w.param("p")),
                           static_cast<std::int64_t>(w.param("q")), w.param("d"),
                           static_cast<std::int64_t>(w.param("delta"))};
      const auto [before, after] = axiom3_indices(spec, c);
      return !(after > before) && same(before, w.value_before) && same(after, w.value_after);
    }
  }
  return false;
}

}  // namespace polarimeter
