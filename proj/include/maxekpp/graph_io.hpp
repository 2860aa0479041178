#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "maxekpp/weighted_graph.hpp"

namespace maxekpp {

struct ParseDiagnostics {
  std::vector<std::string> warnings;
};

/// DIMACS clique format: 'c' comment lines, one "p edge <n> <m>" header,
/// then "e <i> <j>" lines. Duplicate and reversed edge lines collapse to a
/// single edge; every edge weight starts at 1. A header edge count that
/// disagrees with the distinct edges found is reported as a warning, not an
/// error. Throws std::runtime_error (message carries the line number) on a
/// garbled header, unknown line type, self-loop, or out-of-range endpoint.
WeightedGraph parse_dimacs(std::istream& in, ParseDiagnostics* diag = nullptr);

/// Weighted edge-list format: '#' starts a comment, blank lines are
/// skipped, the first data line is the node count, then any mix of
/// "<i> <j> <w>" edge lines and "q <i> <value>" node-weight lines.
/// Unassigned node weights default to 1. Repeating an edge with the same
/// weight collapses; a conflicting weight is an error, as is a negative
/// node weight.
WeightedGraph parse_weighted_edge_list(std::istream& in);

/// Writes the edge-list format read back by parse_weighted_edge_list.
/// Node-weight lines are emitted only when the graph carries them.
void write_weighted_edge_list(std::ostream& out, const WeightedGraph& g);

/// Loads a graph file, sniffing the format: a "p edge" header means
/// DIMACS, anything else is treated as a weighted edge list. Throws
/// std::runtime_error when the file cannot be opened.
WeightedGraph load_graph_file(const std::string& path,
                              ParseDiagnostics* diag = nullptr);

}  // namespace maxekpp
