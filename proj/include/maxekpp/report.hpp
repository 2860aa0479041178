#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "maxekpp/kplex.hpp"
#include "maxekpp/solver.hpp"
#include "maxekpp/solver_config.hpp"
#include "maxekpp/weighted_graph.hpp"

namespace maxekpp {

/// Everything a solve run reports, in one flat record.
struct RunReport {
  std::string instance;
  int n = 0;
  int edges = 0;
  std::optional<double> density;  // absent for n < 2
  int k = 1;
  std::optional<double> lb;
  std::optional<double> ub;
  std::optional<int> max_components;
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<double> value;
  std::optional<double> ub_bound;
  std::optional<double> d_gap;
  bool d_gap_absolute = false;
  double elapsed_s = 0.0;
  std::uint64_t nodes_explored = 0;
  std::optional<PartitionStats> stats;
  std::optional<Partition> partition;
};

RunReport make_run_report(const std::string& instance, const WeightedGraph& g,
                          const SolverConfig& cfg, const SolveResult& result);

/// Row-per-instance table rendering: a header line and one aligned row.
void write_report_table(std::ostream& out, const RunReport& report);

/// JSON object with the stable reporting schema (instance, n, edges,
/// density, k, lb, ub, P, status, value, ub_bound, d_gap, elapsed_s, comp,
/// largest, singlt_pct, components). Missing values are null.
std::string report_to_json(const RunReport& report);

}  // namespace maxekpp
