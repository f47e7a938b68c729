// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polarimeter/analysis.hpp"
#include "polarimeter/axioms.hpp"
#include "polarimeter/index.hpp"
#include "polarimeter/thresholds.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace polarimeter;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> run;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

int sign(double v) { return (v > 0) - (v < 0); }

Outcome critical(double bound, double lo, double hi) {
  const auto e = critical_alpha(bound, 0.01);
  const bool ok = e.alpha_critical >= lo && e.alpha_critical <= hi;
  return {ok, fmt("alpha_critical=%.6f bracket=[%.6f,%.6f] want [%.2f,%.2f]", e.alpha_critical,
                  e.bracket.first, e.bracket.second, lo, hi)};
}

Outcome sup_at_one() {
  const auto s = sup_g(1.0, 1e-3);
  // Every grid point that fed the estimate, plus a full integer box.
  const auto grid = max_g_on_grid(1.0, s.grid_limits);
  double box = 0.0;
  for (std::int64_t p = 1; p <= 256; ++p) {
    for (std::int64_t q = 2; q <= 1024; ++q) box = std::max(box, g_value(p, q, 1.0));
  }
  const bool ok = s.stabilized && s.value >= 0.99 && s.value < 1.0 && grid.value < 1.0 && box < 1.0;
  return {ok, fmt("M_1=%.12f stabilized=%d limits=(%lld,%lld) max_sampled=%.12f box_max=%.12f",
                  s.value, s.stabilized ? 1 : 0, static_cast<long long>(s.grid_limits.p_max),
                  static_cast<long long>(s.grid_limits.q_max), grid.value, box)};
}

Outcome gini_axioms() {
  const AntagonismSpec gini(0.0, Alienation::linear());
  const std::vector<std::int64_t> p{2};
  const std::vector<double> x{1.0};
  const auto a1 = check_axiom1_direct(gini, p, x);
  bool replay = !a1.witnesses.empty();
  for (const auto& w : a1.witnesses) replay = replay && replay_witness(a1, w, gini);
  const auto a2d = check_axiom2_direct(gini);
  const auto a2c = check_axiom2_characterization(gini);
  const auto configs = default_axiom3_configs();
  const auto a3d = check_axiom3_direct(gini, configs);
  const auto d_grid = default_ratio_grid(gini.alienation());
  const auto a3c = check_axiom3_characterization(gini, kDefaultAxiom3PMax, kDefaultAxiom3QMax, d_grid);
  const auto passed = [](const AxiomReport& r) { return r.verdict != Verdict::Fail; };
  const bool ok = a1.verdict == Verdict::Fail && replay && passed(a2d) && passed(a2c) &&
                  passed(a3d) && passed(a3c);
  return {ok, fmt("axiom1=%s witnesses=%zu replay=%d axiom2=%s/%s axiom3=%s/%s",
                  std::string(to_string(a1.verdict)).c_str(), a1.witnesses.size(), replay ? 1 : 0,
                  std::string(to_string(a2d.verdict)).c_str(),
                  std::string(to_string(a2c.verdict)).c_str(),
                  std::string(to_string(a3d.verdict)).c_str(),
                  std::string(to_string(a3c.verdict)).c_str())};
}

Outcome axiom3_signs() {
  gen::Source src(20260101);
  const std::vector<Alienation> fns{Alienation::linear(), Alienation::power(2), Alienation::power(3),
                                    Alienation::exponential(1)};
  int agree = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    const AntagonismSpec spec(src.real(0.0, 2.0), src.pick(fns));
    const Axiom3Config c{src.integer(1, 50), src.integer(3, 50), src.log_uniform(0.01, 10.0), 1};
    const auto [before, after] = axiom3_indices(spec, c);
    const auto& f = spec.alienation();
    agree += sign(after - before) == sign(f(2.0 * c.d) / f(c.d) - g_value(c.p, c.q, spec.alpha()));
  }
  return {agree == total, fmt("%d/%d configurations agree", agree, total)};
}

Outcome scaling_law() {
  gen::Source src(20260102);
  const auto fns = gen::smooth_alienations();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto d = gen::distribution(src, 10, 1000).build();
    const AntagonismSpec spec(src.real(0.0, 2.0), src.pick(fns));
    const auto lambda = src.integer(1, 50);
    const double scaled = evaluate_index(scale_population(d, lambda), spec);
    const double predicted =
        std::pow(static_cast<double>(lambda), spec.alpha() + 2.0) * evaluate_index(d, spec);
    worst = std::max(worst, std::abs(scaled - predicted) / scaled);
  }
  return {worst <= 1e-12, fmt("worst relative error %.3e (limit 1e-12)", worst)};
}

Outcome oracle_equivalence() {
  gen::Source src(20260103);
  const std::vector<std::pair<Alienation, oracle::Fn>> cases{
      {Alienation::linear(), oracle::linear()},
      {Alienation::power(2), oracle::power(2)},
      {Alienation::power(0.5), oracle::power(0.5)},
      {Alienation::exponential(0.3), oracle::exponential(0.3)}};
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto raw = gen::distribution(src, 10, 1000);
    const auto& [fn, ref] = cases[static_cast<std::size_t>(i) % cases.size()];
    const double alpha = src.real(0.0, 2.0);
    const double got = evaluate_index(raw.build(), AntagonismSpec(alpha, fn));
    const long double want = oracle::naive_index(raw.pi, raw.y, alpha, ref);
    worst = std::max(worst, static_cast<double>(std::fabs((got - want) / want)));
  }
  return {worst <= 1e-12, fmt("worst relative error %.3e (limit 1e-12)", worst)};
}

Outcome middle_class() {
  const std::vector<Alienation> fns{Alienation::linear(), Alienation::power(2)};
  const auto grid = default_alpha_grid();
  const auto t = middle_class_transfer_experiment({}, fns, grid);
  const auto& lin = t.rows[0].result;
  bool lin_cross = false;
  for (const auto& c : lin.crossovers) lin_cross = lin_cross || (c.alpha > 0.0 && c.alpha <= 1.0);
  const bool d1_at_one =
      compare(t.d1, t.d2, AntagonismSpec(1.0, Alienation::linear())).ordering == Ordering::FirstHigher;
  const auto& sq = t.rows[1].result;
  bool d2_throughout = sq.crossovers.empty();
  for (auto o : sq.sign_series) d2_throughout = d2_throughout && o == Ordering::SecondHigher;
  return {lin_cross && d1_at_one && d2_throughout,
          fmt("linear crossovers=%zu first=%.6f D1 higher at 1=%d; power:2 crossovers=%zu D2 "
              "higher throughout=%d",
              lin.crossovers.size(), lin.crossovers.empty() ? NAN : lin.crossovers[0].alpha,
              d1_at_one ? 1 : 0, sq.crossovers.size(), d2_throughout ? 1 : 0)};
}

Outcome axiom2_powers() {
  std::string detail;
  bool ok = true;
  for (double r : {1.0, 1.1, 2.0}) {
    const auto rep = check_axiom2_characterization(AntagonismSpec(1.0, Alienation::power(r)));
    ok = ok && rep.verdict == Verdict::Pass;
    detail += fmt("r=%g:%s ", r, std::string(to_string(rep.verdict)).c_str());
  }
  for (double r : {0.5, 0.9}) {
    const AntagonismSpec spec(1.0, Alienation::power(r));
    const auto rep = check_axiom2_characterization(spec);
    const bool witnessed = !rep.witnesses.empty() && replay_witness(rep, rep.witnesses[0], spec);
    ok = ok && rep.verdict == Verdict::Fail && witnessed;
    detail += fmt("r=%g:%s(witness=%d) ", r, std::string(to_string(rep.verdict)).c_str(),
                  witnessed ? 1 : 0);
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "critical_alpha(bound=2, tol=0.01) in [1.55, 1.65]", 60, [] { return critical(2, 1.55, 1.65); }},
      {2, "critical_alpha(bound=4, tol=0.01) in [1.85, 1.95]", 60, [] { return critical(4, 1.85, 1.95); }},
      {3, "stabilized sup_g(1) in [0.99, 1) with every sampled g < 1", 30, sup_at_one},
      {4, "Gini fails Axiom 1 with a replayable witness, passes Axioms 2 and 3", 0, gini_axioms},
      {5, "Axiom 3 direct/characterization sign agreement on 1000 configs", 0, axiom3_signs},
      {6, "scaling law on 1000 triples within 1e-12", 0, scaling_law},
      {7, "index equals naive double sum on 1000 instances within 1e-12", 0, oracle_equivalence},
      {8, "middle-class transfer reversal structure", 10, middle_class},
      {9, "Axiom 2 characterization on power family", 0, axiom2_powers},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s == 0 || secs < c.time_limit_s;
    if (!in_time) o.detail += fmt(" exceeded %.0f s limit", c.time_limit_s);
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] AC%d %s | %s | %.3f s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs);
  }
  std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
