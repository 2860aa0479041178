#include "maxekpp/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace maxekpp {

RunReport make_run_report(const std::string& instance, const WeightedGraph& g,
                          const SolverConfig& cfg, const SolveResult& result) {
  RunReport r;
  r.instance = instance;
  r.n = g.node_count();
  r.edges = g.edge_count();
  if (g.node_count() >= 2) r.density = g.density();
  r.k = cfg.k;
  r.lb = cfg.lb;
  r.ub = cfg.ub;
  r.max_components = cfg.max_components;
  r.status = result.status;
  r.value = result.incumbent_value;
  r.ub_bound = result.best_bound;
  r.d_gap = result.d_gap;
  r.d_gap_absolute = result.d_gap_absolute;
  r.elapsed_s = result.elapsed_s;
  r.nodes_explored = result.nodes_explored;
  if (result.partition) {
    r.partition = result.partition;
    r.stats = partition_stats(g, *result.partition);
  }
  return r;
}

namespace {

std::string opt_num(const std::optional<double>& v, int precision = 2) {
  if (!v) return "-";
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << *v;
  return s.str();
}

}  // namespace

void write_report_table(std::ostream& out, const RunReport& report) {
  const int widths[] = {20, 5, 7, 7, 3, 10, 10, 10, 7, 8, 5, 7, 7};
  const char* headers[] = {"instance", "n",    "edges",  "d",       "k",
                           "status",   "value", "ub",     "d_gap",  "time_s",
                           "comp",     "largest", "singlt"};
  for (int i = 0; i < 13; ++i)
    out << std::left << std::setw(widths[i]) << headers[i] << ' ';
  out << '\n';

  out << std::left << std::setw(widths[0]) << report.instance << ' ';
  out << std::setw(widths[1]) << report.n << ' ';
  out << std::setw(widths[2]) << report.edges << ' ';
  out << std::setw(widths[3]) << opt_num(report.density, 4) << ' ';
  out << std::setw(widths[4]) << report.k << ' ';
  out << std::setw(widths[5]) << to_string(report.status) << ' ';
  out << std::setw(widths[6]) << opt_num(report.value) << ' ';
  out << std::setw(widths[7]) << opt_num(report.ub_bound) << ' ';
  std::string gap = opt_num(report.d_gap);
  if (report.d_gap && report.d_gap_absolute) gap += "(abs)";
  out << std::setw(widths[8]) << gap << ' ';
  out << std::setw(widths[9]) << opt_num(report.elapsed_s, 3) << ' ';
  if (report.stats) {
    out << std::setw(widths[10]) << report.stats->comp << ' ';
    out << std::setw(widths[11]) << report.stats->largest << ' ';
    out << std::setw(widths[12]) << opt_num(std::optional(report.stats->singlt), 1);
  } else {
    out << std::setw(widths[10]) << "-" << ' ' << std::setw(widths[11]) << "-"
        << ' ' << std::setw(widths[12]) << "-";
  }
  out << '\n';
}

std::string report_to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["instance"] = report.instance;
  j["n"] = report.n;
  j["edges"] = report.edges;
  j["density"] = report.density ? nlohmann::json(*report.density)
                                : nlohmann::json(nullptr);
  j["k"] = report.k;
  j["lb"] = report.lb ? nlohmann::json(*report.lb) : nlohmann::json(nullptr);
  j["ub"] = report.ub ? nlohmann::json(*report.ub) : nlohmann::json(nullptr);
  j["P"] = report.max_components ? nlohmann::json(*report.max_components)
                                 : nlohmann::json(nullptr);
  j["status"] = to_string(report.status);
  j["value"] = report.value ? nlohmann::json(*report.value)
                            : nlohmann::json(nullptr);
  j["ub_bound"] = report.ub_bound ? nlohmann::json(*report.ub_bound)
                                  : nlohmann::json(nullptr);
  j["d_gap"] = report.d_gap ? nlohmann::json(*report.d_gap)
                            : nlohmann::json(nullptr);
  j["d_gap_absolute"] = report.d_gap_absolute;
  j["elapsed_s"] = report.elapsed_s;
  j["nodes_explored"] = report.nodes_explored;
  if (report.stats) {
    j["comp"] = report.stats->comp;
    j["largest"] = report.stats->largest;
    j["singlt_pct"] = report.stats->singlt;
  } else {
    j["comp"] = nullptr;
    j["largest"] = nullptr;
    j["singlt_pct"] = nullptr;
  }
  if (report.partition) {
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& members : report.partition->components())
      comps.push_back(members);
    j["components"] = comps;
  } else {
    j["components"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace maxekpp
