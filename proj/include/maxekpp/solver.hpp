#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "maxekpp/partition.hpp"
#include "maxekpp/solver_config.hpp"
#include "maxekpp/weighted_graph.hpp"

namespace maxekpp {

enum class SolveStatus { Optimal, Feasible, Infeasible, Timeout };

std::string to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  /// Best feasible value found; absent when no feasible partition was seen.
  std::optional<double> incumbent_value;
  /// Valid upper bound on the optimum; equals incumbent_value on Optimal.
  std::optional<double> best_bound;
  /// Relative gap in percent, ((UB - LB) / UB) * 100. Zero when LB == UB.
  /// When UB == 0 and LB < 0 the field holds the absolute difference and
  /// d_gap_absolute is set.
  std::optional<double> d_gap;
  bool d_gap_absolute = false;
  std::optional<Partition> partition;
  std::uint64_t nodes_explored = 0;
  double elapsed_s = 0.0;
};

/// Branch-and-bound over node-to-component assignments. Returns Optimal
/// with the exact maximum, Infeasible when the side constraints rule out
/// every partition, and Feasible or Timeout when the time limit strikes
/// first (Feasible when an incumbent exists). With cfg.deterministic the
/// partition is the canonical-lexicographically smallest optimum. The
/// optimal value does not depend on worker_count; the reported co-optimal
/// partition may, except with a single worker.
SolveResult solve_exact(const WeightedGraph& g, const SolverConfig& cfg);

/// Reference oracle: enumerates every partition of the node set in
/// canonical-label order and keeps the first feasible maximum, so the
/// reported partition matches deterministic solve_exact. Ignores the time
/// limit. Throws std::invalid_argument when n > 12.
SolveResult brute_force_optimum(const WeightedGraph& g, const SolverConfig& cfg);

/// Greedy construction: positive-weight merges while feasible, then
/// repair passes for max_components and lb, then single-node relocation
/// until no strict improvement. Returns nothing when the repairs fail to
/// reach feasibility; never returns an infeasible partition.
std::optional<Partition> greedy_warm_start(const WeightedGraph& g,
                                           const SolverConfig& cfg);

/// Computes the reported gap with its guard cases; exposed for reporting.
/// Returns (gap, absolute_flag).
std::pair<double, bool> relative_gap(double lb, double ub);

}  // namespace maxekpp
