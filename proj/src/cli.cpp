#include "polarimeter/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "polarimeter/analysis.hpp"
#include "polarimeter/axioms.hpp"
#include "polarimeter/error.hpp"
#include "polarimeter/index.hpp"
#include "polarimeter/io.hpp"
#include "polarimeter/report.hpp"
#include "polarimeter/thresholds.hpp"

namespace polarimeter {
namespace {

constexpr double kDefaultThresholdTolerance = 1e-3;
const std::vector<double> kDefaultMdValues{0.2, 0.1, 0.05, 0.02, 0.01};
const std::vector<std::int64_t> kAxiom1PValues{2, 3, 5, 10};
const std::vector<double> kAxiom1XValues{0.5, 1.0, 2.0};

std::string_view command_name(Subcommand s) {
  switch (s) {
    case Subcommand::Index: return "index";
    case Subcommand::Compare: return "compare";
    case Subcommand::Sweep: return "sweep";
    case Subcommand::Axioms: return "axioms";
    case Subcommand::Thresholds: return "thresholds";
    case Subcommand::Experiments: return "experiments";
  }
  return "unknown";
}

Distribution load(const std::optional<std::string>& path, const char* flag,
                  const RunConfig& config) {
  if (!path) fail(ErrorCode::InvalidArgument, std::string("missing ") + flag);
  return parse_distribution_file(*path, ParseOptions{config.merge_duplicates});
}

Alienation alienation_of(const RunConfig& config) {
  return parse_alienation_descriptor(config.alienation.value_or("linear"));
}

AntagonismSpec spec_of(const RunConfig& config) {
  if (config.spec) return parse_spec_descriptor(*config.spec);
  if (!config.alpha) fail(ErrorCode::InvalidArgument, "missing --alpha (or --spec)");
  return AntagonismSpec(*config.alpha, alienation_of(config));
}

std::vector<double> alpha_grid_of(const RunConfig& config) {
  if (!config.alpha_range && !config.grid) return default_alpha_grid();
  const auto range = config.alpha_range.value_or(std::pair{0.0, 1.6});
  return uniform_alpha_grid(range.first, range.second, config.grid.value_or(kDefaultAlphaGridPoints));
}

Json header(const RunConfig& config) {
  return Json{{"command", command_name(config.subcommand)}, {"seed", config.seed}};
}

int run_index(const RunConfig& config, std::ostream& out) {
  const auto dist = load(config.dist, "--dist", config);
  const auto spec = spec_of(config);
  const double p = evaluate_index(dist, spec);
  if (config.format == OutputFormat::Csv) {
    out << "alpha,alienation,P\n"
        << format_double(spec.alpha()) << ',' << csv_field(spec.alienation().describe()) << ','
        << format_double(p) << '\n';
    return kExitOk;
  }
  Json j = header(config);
  j["spec"] = to_json(spec);
  j["distribution"] = to_json(dist);
  j["P"] = p;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_compare(const RunConfig& config, std::ostream& out) {
  const auto d1 = load(config.dist, "--dist", config);
  const auto d2 = load(config.dist2, "--dist2", config);
  const auto result =
      compare(d1, d2, spec_of(config), config.tolerance.value_or(kDefaultTieTolerance));
  if (config.format == OutputFormat::Csv) {
    out << "p1,p2,ordering\n"
        << format_double(result.p1) << ',' << format_double(result.p2) << ','
        << to_string(result.ordering) << '\n';
    return kExitOk;
  }
  Json j = header(config);
  j["result"] = to_json(result);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_sweep(const RunConfig& config, std::ostream& out) {
  const auto d1 = load(config.dist, "--dist", config);
  const auto d2 = load(config.dist2, "--dist2", config);
  const auto grid = alpha_grid_of(config);
  const auto result = crossover_scan(d1, d2, alienation_of(config), grid,
                                     config.tolerance.value_or(kDefaultCrossoverTolerance));
  if (config.format == OutputFormat::Csv) {
    write_series_csv(out, result);
    return kExitOk;
  }
  Json j = header(config);
  j["result"] = to_json(result);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_axioms(const RunConfig& config, std::ostream& out) {
  const auto spec = spec_of(config);
  ProbePlan plan;
  plan.seed = config.seed;
  if (config.samples) plan.sample_count = *config.samples;

  std::vector<AxiomReport> reports;
  reports.push_back(check_condition_h(spec, plan));
  reports.push_back(check_axiom1_direct(spec, kAxiom1PValues, kAxiom1XValues, plan));
  reports.push_back(check_axiom1_characterization(spec));
  reports.push_back(check_axiom2_direct(spec, plan));
  reports.push_back(check_axiom2_characterization(spec));
  const auto configs = default_axiom3_configs(config.seed);
  reports.push_back(check_axiom3_direct(spec, configs));
  reports.back().seed = config.seed;
  const auto d_grid = default_ratio_grid(spec.alienation());
  reports.push_back(check_axiom3_characterization(spec, kDefaultAxiom3PMax, kDefaultAxiom3QMax,
                                                  d_grid));

  bool any_fail = false;
  for (const auto& r : reports) any_fail = any_fail || r.verdict == Verdict::Fail;

  if (config.format == OutputFormat::Csv) {
    write_axiom_reports_csv(out, reports);
  } else {
    Json j = header(config);
    j["spec"] = to_json(spec);
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = std::move(arr);
    out << j.dump(2) << '\n';
  }
  return config.strict && any_fail ? kExitViolation : kExitOk;
}

int run_thresholds(const RunConfig& config, std::ostream& out) {
  if (config.bound || (!config.alpha && !config.alienation)) {
    if (!config.bound) fail(ErrorCode::InvalidArgument, "thresholds needs --bound, --alpha or --alienation");
    const auto est = critical_alpha(*config.bound, config.tolerance.value_or(kDefaultThresholdTolerance),
                                    config.alpha_range.value_or(kDefaultAlphaRange));
    if (config.format == OutputFormat::Csv) {
      write_m_alpha_csv(out, est.m_alpha_samples);
      return kExitOk;
    }
    Json j = header(config);
    j["threshold"] = to_json(est);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (config.alpha) {
    const auto est = sup_g(*config.alpha, config.tolerance.value_or(kDefaultSupTolerance));
    if (config.format == OutputFormat::Csv) {
      const std::pair<double, double> sample{est.alpha, est.value};
      write_m_alpha_csv(out, std::span(&sample, 1));
      return kExitOk;
    }
    Json j = header(config);
    j["sup"] = to_json(est);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  const auto fn = alienation_of(config);
  const auto est = feasible_alpha_interval(fn, config.tolerance.value_or(kDefaultThresholdTolerance));
  if (config.format == OutputFormat::Csv) {
    write_m_alpha_csv(out, est.m_alpha_samples);
    return kExitOk;
  }
  Json j = header(config);
  j["alienation"] = fn.describe();
  j["feasible_interval"] = Json::array({0.0, est.alpha_critical});
  j["threshold"] = to_json(est);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_experiments(const RunConfig& config, std::ostream& out) {
  const auto& which = config.experiment;
  if (which != "all" && which != "middle" && which != "cluster") {
    fail(ErrorCode::InvalidArgument, "--experiment must be middle, cluster or all");
  }
  std::vector<Alienation> fns;
  if (config.alienation) {
    fns.push_back(alienation_of(config));
  } else {
    fns = {Alienation::linear(), Alienation::power(2.0)};
  }
  const auto grid = alpha_grid_of(config);

  std::vector<ExperimentTable> tables;
  if (which != "cluster") tables.push_back(middle_class_transfer_experiment({}, fns, grid));
  if (which != "middle") {
    const auto& mds = config.md_values.empty() ? kDefaultMdValues : config.md_values;
    for (auto& t : cluster_md_sweep({}, mds, fns, grid)) tables.push_back(std::move(t));
  }
  if (config.tolerance) {
    // Re-run with the requested refinement tolerance.
    for (auto& t : tables) {
      for (auto& row : t.rows) {
        row.result = crossover_scan(t.d1, t.d2, row.result.alienation, grid, *config.tolerance);
      }
    }
  }

  if (config.format == OutputFormat::Csv) {
    write_experiments_csv(out, tables);
    return kExitOk;
  }
  Json j = header(config);
  Json arr = Json::array();
  for (const auto& t : tables) arr.push_back(to_json(t));
  j["tables"] = std::move(arr);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  switch (config.subcommand) {
    case Subcommand::Index: return run_index(config, out);
    case Subcommand::Compare: return run_compare(config, out);
    case Subcommand::Sweep: return run_sweep(config, out);
    case Subcommand::Axioms: return run_axioms(config, out);
    case Subcommand::Thresholds: return run_thresholds(config, out);
    case Subcommand::Experiments: return run_experiments(config, out);
  }
  fail(ErrorCode::InvalidArgument, "unknown subcommand");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status = kExitOk;
  try {
    status = dispatch(config, buffer);
    if (config.out) {
      std::ofstream file(*config.out, std::ios::binary);
      if (!file) fail(ErrorCode::IoError, "cannot open '" + *config.out + "' for writing");
      file << buffer.str();
      if (!file) fail(ErrorCode::IoError, "cannot write '" + *config.out + "'");
    } else {
      out << buffer.str();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return status;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polarization index toolkit"};
  app.require_subcommand(1);
  RunConfig config;

  std::string format = "json";
  std::vector<double> range;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "Random seed (default 0)");
    sub->add_option("--out", config.out, "Write the report to this file");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  const auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--alpha", config.alpha, "Identification exponent alpha >= 0");
    sub->add_option("--alienation", config.alienation,
                    "linear | power:<r> | poly:<c1>,... | exp:<k> | table:<path>");
  };
  const auto add_range = [&](CLI::App* sub) {
    sub->add_option("--alpha-range", range, "lo,hi")->expected(2)->delimiter(',');
    sub->add_option("--grid", config.grid, "Number of alpha grid points");
  };

  auto* index = app.add_subcommand("index", "Evaluate P for one distribution");
  index->add_option("--dist", config.dist, "Distribution file (CSV or JSON)");
  index->add_option("--spec", config.spec, "alpha=<a>,<alienation>");
  index->add_flag("--merge-duplicates", config.merge_duplicates, "Merge rows with equal y");
  add_spec(index);
  add_common(index);

  auto* cmp = app.add_subcommand("compare", "Compare two distributions at one spec");
  cmp->add_option("--dist", config.dist, "First distribution");
  cmp->add_option("--dist2", config.dist2, "Second distribution");
  cmp->add_option("--spec", config.spec, "alpha=<a>,<alienation>");
  cmp->add_option("--tol", config.tolerance, "Relative tie tolerance (default 1e-12)");
  cmp->add_flag("--merge-duplicates", config.merge_duplicates, "Merge rows with equal y");
  add_spec(cmp);
  add_common(cmp);

  auto* sweep = app.add_subcommand("sweep", "Scan alpha for ranking reversals");
  sweep->add_option("--dist", config.dist, "First distribution");
  sweep->add_option("--dist2", config.dist2, "Second distribution");
  sweep->add_option("--alienation", config.alienation, "Alienation function (default linear)");
  sweep->add_option("--tol", config.tolerance, "Crossover bisection tolerance (default 1e-6)");
  sweep->add_flag("--merge-duplicates", config.merge_duplicates, "Merge rows with equal y");
  add_range(sweep);
  add_common(sweep);

  auto* axioms = app.add_subcommand("axioms", "Check Condition H and Axioms 1-3");
  axioms->add_option("--spec", config.spec, "alpha=<a>,<alienation>");
  axioms->add_option("--samples", config.samples, "Random probes per sampled check");
  axioms->add_flag("--strict", config.strict, "Exit 1 if any check fails");
  add_spec(axioms);
  add_common(axioms);

  auto* thr = app.add_subcommand("thresholds", "Critical alpha, M_alpha or feasible interval");
  thr->add_option("--bound", config.bound, "Find alpha with M_alpha = bound");
  thr->add_option("--tol", config.tolerance, "Bisection (or sup) tolerance");
  add_spec(thr);
  thr->add_option("--alpha-range", range, "lo,hi")->expected(2)->delimiter(',');
  add_common(thr);

  auto* exp = app.add_subcommand("experiments", "Ranking-reversal reconstructions");
  exp->add_option("--experiment", config.experiment, "middle | cluster | all");
  exp->add_option("--alienation", config.alienation, "Single alienation (default linear and power:2)");
  exp->add_option("--md", config.md_values, "Cluster spreads to sweep")->delimiter(',');
  exp->add_option("--tol", config.tolerance, "Crossover bisection tolerance (default 1e-6)");
  add_range(exp);
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help arrives as a ParseError with exit code 0.
    if (e.get_exit_code() == 0) {
      for (auto* sub : app.get_subcommands()) out << sub->help();
      if (app.get_subcommands().empty()) out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (index->parsed()) config.subcommand = Subcommand::Index;
  if (cmp->parsed()) config.subcommand = Subcommand::Compare;
  if (sweep->parsed()) config.subcommand = Subcommand::Sweep;
  if (axioms->parsed()) config.subcommand = Subcommand::Axioms;
  if (thr->parsed()) config.subcommand = Subcommand::Thresholds;
  if (exp->parsed()) config.subcommand = Subcommand::Experiments;
  config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  if (range.size() == 2) config.alpha_range = std::pair{range[0], range[1]};
  return run(config, out, err);
}

}  // namespace polarimeter
