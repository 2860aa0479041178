#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "maxekpp/weighted_graph.hpp"

namespace testsupport {

// All randomness in the tests flows through raw mt19937 draws with explicit
// modulo so expected values stay identical across platforms.

inline std::uint32_t draw(std::mt19937& rng, std::uint32_t bound) {
  return rng() % bound;
}

// Every pair kept with probability density (in percent); weights uniform
// integers in [-100, 100].
inline maxekpp::WeightedGraph random_graph(int n, int density_pct,
                                           std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<maxekpp::WeightedEdge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const bool keep = draw(rng, 100) < static_cast<std::uint32_t>(density_pct);
      const double w = static_cast<double>(draw(rng, 201)) - 100.0;
      if (keep) edges.push_back({i, j, w});
    }
  return maxekpp::WeightedGraph(n, std::move(edges));
}

inline maxekpp::WeightedGraph random_nonnegative_graph(int n, int density_pct,
                                                       std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<maxekpp::WeightedEdge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const bool keep = draw(rng, 100) < static_cast<std::uint32_t>(density_pct);
      const double w = static_cast<double>(draw(rng, 101));
      if (keep) edges.push_back({i, j, w});
    }
  return maxekpp::WeightedGraph(n, std::move(edges));
}

// Nodes are the 28 two-element subsets of an 8-set in lexicographic order;
// two nodes are adjacent when their subsets are disjoint.
inline maxekpp::WeightedGraph johnson8_2_4() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b) subsets.push_back({a, b});
  std::vector<maxekpp::WeightedEdge> edges;
  const int n = static_cast<int>(subsets.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& [a, b] = subsets[i];
      const auto& [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d)
        edges.push_back({i + 1, j + 1, 1.0});
    }
  return maxekpp::WeightedGraph(n, std::move(edges));
}

// Node i represents the 6-bit word i - 1; adjacent when the Hamming
// distance is at least 4.
inline maxekpp::WeightedGraph hamming6_4() {
  std::vector<maxekpp::WeightedEdge> edges;
  for (int i = 0; i < 64; ++i)
    for (int j = i + 1; j < 64; ++j)
      if (std::popcount(static_cast<unsigned>(i ^ j)) >= 4)
        edges.push_back({i + 1, j + 1, 1.0});
  return maxekpp::WeightedGraph(64, std::move(edges));
}

inline maxekpp::WeightedGraph complete_graph(int n, double weight = 1.0) {
  std::vector<maxekpp::WeightedEdge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j, weight});
  return maxekpp::WeightedGraph(n, std::move(edges));
}

inline maxekpp::WeightedGraph path_graph(int n, double weight = 1.0) {
  std::vector<maxekpp::WeightedEdge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, weight});
  return maxekpp::WeightedGraph(n, std::move(edges));
}

inline maxekpp::WeightedGraph cycle_graph(int n, double weight = 1.0) {
  std::vector<maxekpp::WeightedEdge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, weight});
  edges.push_back({1, n, weight});
  return maxekpp::WeightedGraph(n, std::move(edges));
}

inline std::string data_path(const char* name) {
  return std::string(MAXEKPP_TEST_DATA_DIR) + "/" + name;
}

}  // namespace testsupport
