#include "maxekpp/weighted_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace maxekpp {

namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

WeightedGraph::WeightedGraph(int node_count, std::vector<WeightedEdge> edges,
                             std::optional<std::vector<double>> node_weights)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 1)
    throw std::invalid_argument("graph needs at least one node, got n=" +
                                std::to_string(node_count_));

  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > node_count_)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  pair_text(e.first, e.second));
    if (e.first == e.second)
      throw std::invalid_argument("self-loop on node " + std::to_string(e.first));
  }
  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first, a.second) < std::pair(b.first, b.second);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i - 1].first == edges_[i].first &&
        edges_[i - 1].second == edges_[i].second)
      throw std::invalid_argument("duplicate edge " +
                                  pair_text(edges_[i].first, edges_[i].second));

  if (node_weights) {
    if (static_cast<int>(node_weights->size()) != node_count_)
      throw std::invalid_argument("expected " + std::to_string(node_count_) +
                                  " node weights, got " +
                                  std::to_string(node_weights->size()));
    for (double q : *node_weights)
      if (q < 0.0) throw std::invalid_argument("negative node weight");
    has_node_weights_ = true;
    node_weights_.assign(1, 0.0);
    node_weights_.insert(node_weights_.end(), node_weights->begin(),
                         node_weights->end());
  } else {
    node_weights_.assign(static_cast<std::size_t>(node_count_) + 1, 1.0);
    node_weights_[0] = 0.0;
  }

  std::vector<int> deg(static_cast<std::size_t>(node_count_) + 1, 0);
  for (const auto& e : edges_) {
    ++deg[e.first];
    ++deg[e.second];
  }
  adjacency_offsets_.assign(static_cast<std::size_t>(node_count_) + 2, 0);
  for (int v = 1; v <= node_count_; ++v)
    adjacency_offsets_[v + 1] = adjacency_offsets_[v] + deg[v];
  adjacency_.resize(static_cast<std::size_t>(adjacency_offsets_[node_count_ + 1]));
  std::vector<int> fill(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.first]++] = {e.second, e.weight};
    adjacency_[fill[e.second]++] = {e.first, e.weight};
  }
  // Per-node runs are already ascending: edges are sorted and each run is
  // filled first by second-endpoint order, then by first-endpoint order.

  words_per_row_ = (node_count_ + 1) / 64 + 1;
  adj_bits_.assign(static_cast<std::size_t>(words_per_row_) * (node_count_ + 1), 0);
  for (const auto& e : edges_) {
    adj_bits_[static_cast<std::size_t>(e.first) * words_per_row_ + e.second / 64] |=
        std::uint64_t{1} << (e.second % 64);
    adj_bits_[static_cast<std::size_t>(e.second) * words_per_row_ + e.first / 64] |=
        std::uint64_t{1} << (e.first % 64);
  }
}

void WeightedGraph::check_node(int node, const char* what) const {
  if (node < 1 || node > node_count_)
    throw std::out_of_range(std::string(what) + ": node " + std::to_string(node) +
                            " outside 1.." + std::to_string(node_count_));
}

double WeightedGraph::node_weight(int node) const {
  check_node(node, "node_weight");
  return node_weights_[node];
}

double WeightedGraph::total_node_weight() const {
  double total = 0.0;
  for (int v = 1; v <= node_count_; ++v) total += node_weights_[v];
  return total;
}

std::span<const Neighbor> WeightedGraph::neighbors(int node) const {
  check_node(node, "neighbors");
  return {adjacency_.data() + adjacency_offsets_[node],
          adjacency_.data() + adjacency_offsets_[node + 1]};
}

bool WeightedGraph::adjacent(int u, int v) const {
  check_node(u, "adjacent");
  check_node(v, "adjacent");
  return (adj_bits_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] >>
          (v % 64)) & 1;
}

double WeightedGraph::edge_weight(int u, int v) const {
  for (const auto& nb : neighbors(u))
    if (nb.node == v) return nb.weight;
  throw std::out_of_range("no edge " + pair_text(u, v));
}

int WeightedGraph::degree(int node) const {
  check_node(node, "degree");
  return adjacency_offsets_[node + 1] - adjacency_offsets_[node];
}

int WeightedGraph::min_degree() const {
  int best = node_count_;
  for (int v = 1; v <= node_count_; ++v) best = std::min(best, degree(v));
  return best;
}

double WeightedGraph::density() const {
  if (node_count_ < 2)
    throw std::domain_error("density undefined for n < 2");
  return 2.0 * edge_count() /
         (static_cast<double>(node_count_) * (node_count_ - 1));
}

double WeightedGraph::total_edge_weight() const {
  double total = 0.0;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

bool WeightedGraph::all_weights_nonnegative() const {
  for (const auto& e : edges_)
    if (e.weight < 0.0) return false;
  return true;
}

bool WeightedGraph::integral_weights() const {
  for (const auto& e : edges_)
    if (e.weight != std::floor(e.weight)) return false;
  return true;
}

std::vector<NodePair> WeightedGraph::complement_edges() const {
  std::vector<NodePair> out;
  out.reserve(static_cast<std::size_t>(node_count_) * (node_count_ - 1) / 2 -
              edges_.size());
  for (int i = 1; i <= node_count_; ++i)
    for (int j = i + 1; j <= node_count_; ++j)
      if (!adjacent(i, j)) out.push_back({i, j});
  return out;
}

WeightedGraph WeightedGraph::with_pullan_weights() const {
  std::vector<WeightedEdge> reweighted = edges_;
  for (auto& e : reweighted)
    e.weight = static_cast<double>((e.first + e.second) % 200 + 1);
  std::optional<std::vector<double>> q;
  if (has_node_weights_)
    q = std::vector<double>(node_weights_.begin() + 1, node_weights_.end());
  return WeightedGraph(node_count_, std::move(reweighted), std::move(q));
}

WeightedGraph WeightedGraph::with_unit_weights() const {
  std::vector<WeightedEdge> reweighted = edges_;
  for (auto& e : reweighted) e.weight = 1.0;
  std::optional<std::vector<double>> q;
  if (has_node_weights_)
    q = std::vector<double>(node_weights_.begin() + 1, node_weights_.end());
  return WeightedGraph(node_count_, std::move(reweighted), std::move(q));
}

std::span<const std::uint64_t> WeightedGraph::adjacency_bits(int node) const {
  check_node(node, "adjacency_bits");
  return {adj_bits_.data() + static_cast<std::size_t>(node) * words_per_row_,
          static_cast<std::size_t>(words_per_row_)};
}

}  // namespace maxekpp
