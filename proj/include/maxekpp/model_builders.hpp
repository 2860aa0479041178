#pragma once

#include <optional>

#include "maxekpp/ilp_model.hpp"
#include "maxekpp/weighted_graph.hpp"

namespace maxekpp {

/// Clique-partitioning model for complete graphs: one x variable per pair
/// and the three triangle rows (tags "(1)".."(3)") for every node triple.
/// Throws std::invalid_argument when the graph is not complete.
IlpModel build_complete_clique_model(const WeightedGraph& g);

/// Clique-partitioning model for arbitrary graphs: x variables on E only.
/// Triples whose three pairs are all edges get the three triangle rows
/// (tags "(5)".."(7)"); a triple with exactly one absent pair gets the
/// single row x + x <= 1 over its two edges (tag "(8)"); triples missing
/// two or three pairs need no row. Feasible assignments are exactly the
/// partitions of the graph into cliques.
IlpModel build_sparse_clique_model(const WeightedGraph& g);

/// k-plex partitioning model for k >= 2: x variables on E, v variables on
/// the complement, the three triangle rows for every node triple over
/// whichever variable lives on each pair (tags "(10)".."(12)"), and one
/// row per node capping its selected complement pairs at k - 1 (tag
/// "(13)"). Degree rows with no complement pairs are dropped but still
/// counted by generated_constraint_count. With reduce and k == 2, rows the
/// degree cap makes redundant are omitted: triples whose pairs all lie in
/// the complement contribute nothing, and a triple with exactly two
/// complement pairs loses the row whose positive terms are those two v
/// variables. Throws std::invalid_argument when k < 2.
IlpModel build_kplex_model(const WeightedGraph& g, int k, bool reduce = true);

/// Adds per-component node-weight bounds: for every node i, the selected
/// co-members of i must bring its component's weight into [lb, ub], via
/// sum q_j x_ij >= lb - q_i and/or <= ub - q_i. The sums run over the
/// neighbors of i for the clique models (tags "(16)", "(17)") and over all
/// j != i for the k-plex model (tags "(18)", "(19)"). At least one bound
/// must be given; throws std::invalid_argument on lb > ub, negative
/// bounds, or lb exceeding the total node weight (then no partition at all
/// can satisfy it).
IlpModel add_capacity_bounds(const IlpModel& m, const WeightedGraph& g,
                             std::optional<double> lb,
                             std::optional<double> ub);

/// Restricts solutions to at most P components via z_{i,p} slot
/// indicators: every node picks exactly one of P slots, and two nodes
/// sharing a slot force their pair variable to 1 (a pair with no variable
/// may not share one). Tags "(20)".."(22)" for the clique models,
/// "(23)"/"(24)" for the k-plex model. Throws std::invalid_argument on
/// P < 1 or a model that already carries a component limit.
IlpModel add_component_limit(const IlpModel& m, const WeightedGraph& g, int P);

}  // namespace maxekpp
