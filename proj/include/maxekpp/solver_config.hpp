#pragma once

#include <cstdint>
#include <optional>

namespace maxekpp {

/// Shared knobs for the exact search, the reference oracles, and partition
/// validation. lb/ub bound each component's node-weight sum (both
/// inclusive); max_components caps how many components a partition may use.
struct SolverConfig {
  int k = 1;
  std::optional<double> time_limit_s;
  std::optional<double> lb;
  std::optional<double> ub;
  std::optional<int> max_components;
  /// Deterministic mode assigns nodes in id order and tries component
  /// labels ascending, which pins the reported optimum to the partition
  /// with the lexicographically smallest canonical labeling. When off, the
  /// search orders nodes by descending weighted degree for pruning power;
  /// the optimal value is unchanged but the reported partition may be a
  /// different co-optimum.
  bool deterministic = true;
  int worker_count = 1;
  /// Emit a progress line to stderr every this many search nodes; 0 = off.
  std::uint64_t progress_node_interval = 0;
};

/// Throws std::invalid_argument on k < 1, lb > ub, negative bounds or time
/// limit, max_components < 1, or worker_count < 1.
void validate_config(const SolverConfig& cfg);

}  // namespace maxekpp
