#include "polarimeter/report.hpp"

#include <ostream>
#include <string>

#include "polarimeter/io.hpp"

namespace polarimeter {
namespace {

Json params_json(const std::vector<std::pair<std::string, double>>& params) {
  Json out = Json::object();
  for (const auto& [key, value] : params) out[key] = value;
  return out;
}

Json limits_json(const GridLimits& limits) {
  return Json{{"p_max", limits.p_max}, {"q_max", limits.q_max}};
}

}  // namespace

Json to_json(const Distribution& dist) {
  Json pi = Json::array();
  Json y = Json::array();
  for (auto v : dist.populations()) pi.push_back(v);
  for (auto v : dist.positions()) y.push_back(v);
  return Json{{"pi", pi}, {"y", y}};
}

Json to_json(const AntagonismSpec& spec) {
  return Json{{"alpha", spec.alpha()}, {"alienation", spec.alienation().describe()}};
}

Json to_json(const Witness& w) {
  Json out{{"params", params_json(w.params)}};
  if (w.before) out["before"] = to_json(*w.before);
  if (w.after) out["after"] = to_json(*w.after);
  out["value_before"] = w.value_before;
  out["value_after"] = w.value_after;
  return out;
}

Json to_json(const AxiomReport& r) {
  Json out{{"axiom", to_string(r.axiom)},
           {"mode", to_string(r.mode)},
           {"verdict", to_string(r.verdict)},
           {"probes", r.probes},
           {"seed", r.seed}};
  out["min_margin"] = r.min_margin ? Json(*r.min_margin) : Json(nullptr);
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  Json evidence = Json::array();
  for (const auto& w : r.evidence) evidence.push_back(to_json(w));
  out["witnesses"] = std::move(witnesses);
  out["evidence"] = std::move(evidence);
  out["notes"] = r.notes;
  return out;
}

Json to_json(const SupEstimate& e) {
  return Json{{"alpha", e.alpha},
              {"m_alpha", e.value},
              {"argmax", Json{{"p", e.argmax.first}, {"q", e.argmax.second}}},
              {"grid_limits", limits_json(e.grid_limits)},
              {"stabilized", e.stabilized},
              {"from_ray_limit", e.from_ray_limit},
              {"evaluations", e.evaluations},
              {"last_change", e.last_change},
              {"history", e.history}};
}

Json to_json(const ThresholdEstimate& e) {
  Json samples = Json::array();
  for (const auto& [alpha, m] : e.m_alpha_samples) samples.push_back(Json{{"alpha", alpha}, {"m_alpha", m}});
  return Json{{"bound", e.bound},
              {"alpha_critical", e.alpha_critical},
              {"bracket", Json::array({e.bracket.first, e.bracket.second})},
              {"grid_limits", limits_json(e.grid_limits)},
              {"tolerance", e.tolerance},
              {"iterations", e.iterations},
              {"m_alpha_samples", std::move(samples)}};
}

Json to_json(const ComparisonResult& r) {
  return Json{{"p1", r.p1}, {"p2", r.p2}, {"ordering", to_string(r.ordering)},
              {"spec", to_json(r.spec)}};
}

Json to_json(const CrossoverResult& r) {
  Json series = Json::array();
  for (std::size_t i = 0; i < r.series.size(); ++i) {
    series.push_back(Json{{"alpha", r.series[i].alpha},
                          {"p1", r.series[i].p1},
                          {"p2", r.series[i].p2},
                          {"ordering", to_string(r.sign_series[i])}});
  }
  Json crossovers = Json::array();
  for (const auto& c : r.crossovers) {
    crossovers.push_back(Json{{"lo", c.lo},
                              {"hi", c.hi},
                              {"alpha", c.alpha},
                              {"from", to_string(c.from)},
                              {"to", to_string(c.to)}});
  }
  return Json{{"alienation", r.alienation.describe()},
              {"tolerance", r.tolerance},
              {"crossovers", std::move(crossovers)},
              {"series", std::move(series)}};
}

Json to_json(const ExperimentTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json j = to_json(row.result);
    j["label"] = row.label;
    rows.push_back(std::move(j));
  }
  return Json{{"experiment", t.name},
              {"params", params_json(t.params)},
              {"d1", to_json(t.d1)},
              {"d2", to_json(t.d2)},
              {"rows", std::move(rows)}};
}

void write_axiom_reports_csv(std::ostream& out, std::span<const AxiomReport> reports) {
  out << "axiom,mode,verdict,probes,seed,witnesses,min_margin\n";
  for (const auto& r : reports) {
    out << to_string(r.axiom) << ',' << to_string(r.mode) << ',' << to_string(r.verdict) << ','
        << r.probes << ',' << r.seed << ',' << r.witnesses.size() << ','
        << (r.min_margin ? format_double(*r.min_margin) : std::string()) << '\n';
  }
}

void write_series_csv(std::ostream& out, const CrossoverResult& r) {
  out << "alpha,p1,p2,ordering\n";
  for (std::size_t i = 0; i < r.series.size(); ++i) {
    out << format_double(r.series[i].alpha) << ',' << format_double(r.series[i].p1) << ','
        << format_double(r.series[i].p2) << ',' << to_string(r.sign_series[i]) << '\n';
  }
}

void write_experiments_csv(std::ostream& out, std::span<const ExperimentTable> tables) {
  out << "experiment,table,alienation,params,lo,hi,alpha,from,to\n";
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& table = tables[t];
    std::string params;
    for (const auto& [key, value] : table.params) {
      if (!params.empty()) params += ';';
      params += key + '=' + format_double(value);
    }
    for (const auto& row : table.rows) {
      const std::string prefix = csv_field(table.name) + ',' + std::to_string(t) + ',' +
                                 csv_field(row.label) + ',' + csv_field(params);
      if (row.result.crossovers.empty()) {
        out << prefix << ",,,,,\n";
        continue;
      }
      for (const auto& c : row.result.crossovers) {
        out << prefix << ',' << format_double(c.lo) << ',' << format_double(c.hi) << ','
            << format_double(c.alpha) << ',' << to_string(c.from) << ',' << to_string(c.to)
            << '\n';
      }
    }
  }
}

}  // namespace polarimeter
