#pragma once

#include <string>
#include <vector>

#include "maxekpp/partition.hpp"
#include "maxekpp/solver_config.hpp"
#include "maxekpp/weighted_graph.hpp"

namespace maxekpp {

/// True iff every member of `members` is adjacent to at least
/// |members| - k others inside it. Any set of size <= k qualifies; k = 1
/// means a clique. Throws std::invalid_argument on k < 1, an empty set,
/// duplicates, or nodes outside the graph.
bool is_kplex(const WeightedGraph& g, const std::vector<int>& members, int k);

/// Sum of edge weights with both endpoints in the same component.
double partition_weight(const WeightedGraph& g, const Partition& p);

enum class ViolationKind {
  NotKPlex,
  BelowLowerBound,
  AboveUpperBound,
  TooManyComponents,
};

struct Violation {
  ViolationKind kind;
  /// Offending component's label; 0 for the partition-wide component-count
  /// violation.
  int component_label = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool feasible() const { return violations.empty(); }
};

/// Checks every component against the k-plex condition and against the
/// side constraints carried by cfg (lb/ub on node-weight sums,
/// max_components). k comes from the explicit parameter; cfg.k is ignored.
ValidationReport validate_partition(const WeightedGraph& g, const Partition& p,
                                    int k, const SolverConfig& cfg);

/// Labels of components with at least two nodes and zero intra-component
/// edges. Singletons never count. Such components are always co-optimal
/// with splitting them apart when weights are nonnegative.
std::vector<int> spurious_components(const WeightedGraph& g, const Partition& p);

/// True iff all edge weights are nonnegative and k >= n - min_degree, in
/// which case the whole node set is one feasible component and the optimum
/// is the total edge weight (absent side constraints).
bool prop1_applies(const WeightedGraph& g, int k);

struct PartitionStats {
  int comp = 0;        // number of components
  int largest = 0;     // size of the largest component
  double singlt = 0.0; // share of nodes in singleton components, percent
  double weight = 0.0; // intra-component edge weight sum
};

PartitionStats partition_stats(const WeightedGraph& g, const Partition& p);

}  // namespace maxekpp
