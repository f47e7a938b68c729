#pragma once

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "polarimeter/analysis.hpp"
#include "polarimeter/axioms.hpp"
#include "polarimeter/thresholds.hpp"

namespace polarimeter {

using Json = nlohmann::ordered_json;

Json to_json(const Distribution& dist);
Json to_json(const AntagonismSpec& spec);
Json to_json(const Witness& witness);
Json to_json(const AxiomReport& report);
Json to_json(const SupEstimate& estimate);
Json to_json(const ThresholdEstimate& estimate);
Json to_json(const ComparisonResult& result);
Json to_json(const CrossoverResult& result);
Json to_json(const ExperimentTable& table);

// CSV tables (header row, RFC-4180 quoting, numbers at %.17g).

/// axiom,mode,verdict,probes,seed,witnesses,min_margin
void write_axiom_reports_csv(std::ostream& out, std::span<const AxiomReport> reports);

/// alpha,p1,p2,ordering
void write_series_csv(std::ostream& out, const CrossoverResult& result);

/// experiment,table,alienation,params,lo,hi,alpha,from,to. `params` is
/// `key=value;...`. One row per crossover, or one row with empty crossover
/// columns when a function has none.
void write_experiments_csv(std::ostream& out, std::span<const ExperimentTable> tables);

}  // namespace polarimeter
