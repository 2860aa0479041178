#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace maxekpp {

/// Unordered node pair stored with first < second. Nodes are 1-based.
struct NodePair {
  int first = 0;
  int second = 0;

  friend bool operator==(const NodePair&, const NodePair&) = default;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct WeightedEdge {
  int first = 0;
  int second = 0;
  double weight = 1.0;
};

struct Neighbor {
  int node = 0;
  double weight = 0.0;
};

/// Sparse simple undirected graph with real edge weights and optional
/// non-negative node weights. Nodes are identified 1..n; edges are kept
/// once with first < second. Immutable after construction and safe for
/// unsynchronized concurrent reads.
class WeightedGraph {
 public:
  /// Endpoints may come in any order and are normalized to first < second.
  /// Throws std::invalid_argument on self-loops, duplicate pairs,
  /// endpoints outside 1..n, non-positive n, or negative node weights.
  WeightedGraph(int node_count, std::vector<WeightedEdge> edges,
                std::optional<std::vector<double>> node_weights = std::nullopt);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges in lexicographic order, each with first < second.
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  /// Node weights default to 1 for every node when none were supplied.
  bool has_node_weights() const { return has_node_weights_; }
  double node_weight(int node) const;
  double total_node_weight() const;

  /// Neighbors of a node in ascending id order.
  std::span<const Neighbor> neighbors(int node) const;
  bool adjacent(int u, int v) const;
  double edge_weight(int u, int v) const;  // throws if the edge is absent
  int degree(int node) const;

  int min_degree() const;
  /// 2|E| / (n(n-1)); throws std::domain_error when n < 2.
  double density() const;
  double total_edge_weight() const;
  bool all_weights_nonnegative() const;
  /// True when every edge weight is an integer value, in which case all
  /// objective accumulation downstream is exact.
  bool integral_weights() const;

  /// Pairs (i,j), i<j, not present in the edge set, lexicographically
  /// sorted. Satisfies |E| + |complement| = n(n-1)/2.
  std::vector<NodePair> complement_edges() const;

  /// Same structure with every edge (i,j) reweighted to ((i+j) mod 200) + 1.
  WeightedGraph with_pullan_weights() const;
  /// Same structure with every edge weight set to 1.
  WeightedGraph with_unit_weights() const;

  /// Adjacency row as 64-bit blocks; bit v is set iff {node, v} is an edge.
  std::span<const std::uint64_t> adjacency_bits(int node) const;
  int adjacency_words() const { return words_per_row_; }

 private:
  void check_node(int node, const char* what) const;

  int node_count_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<double> node_weights_;  // 1-based, index 0 unused
  bool has_node_weights_ = false;
  std::vector<Neighbor> adjacency_;   // flattened, grouped per node
  std::vector<int> adjacency_offsets_;
  std::vector<std::uint64_t> adj_bits_;
  int words_per_row_ = 0;
};

}  // namespace maxekpp
