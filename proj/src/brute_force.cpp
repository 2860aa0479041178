#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "maxekpp/kplex.hpp"
#include "maxekpp/solver.hpp"

namespace maxekpp {

namespace {

// Advances a restricted-growth string to its successor. labels has size n;
// max_prefix[i] is the largest label among positions 0..i. Returns false
// after the last string (all positions distinct).
bool next_restricted_growth(std::vector<int>& labels,
                            std::vector<int>& max_prefix) {
  const int n = static_cast<int>(labels.size());
  for (int pos = n - 1; pos >= 1; --pos) {
    if (labels[pos] <= max_prefix[pos - 1]) {
      ++labels[pos];
      max_prefix[pos] = std::max(max_prefix[pos - 1], labels[pos]);
      for (int rest = pos + 1; rest < n; ++rest) {
        labels[rest] = 1;
        max_prefix[rest] = max_prefix[rest - 1];
      }
      return true;
    }
  }
  return false;
}

}  // namespace

SolveResult brute_force_optimum(const WeightedGraph& g,
                                const SolverConfig& cfg) {
  validate_config(cfg);
  const int n = g.node_count();
  if (n > 12)
    throw std::invalid_argument("brute force capped at n <= 12, got n=" +
                                std::to_string(n));
  const auto started = std::chrono::steady_clock::now();

  std::vector<int> labels(static_cast<std::size_t>(n), 1);
  std::vector<int> max_prefix(static_cast<std::size_t>(n), 1);
  SolveResult result;
  result.status = SolveStatus::Infeasible;

  // Scratch list of members per label; labels never exceed n.
  std::vector<std::vector<int>> comps(static_cast<std::size_t>(n) + 1);
  do {
    ++result.nodes_explored;
    int used = 0;
    for (int v = 1; v <= n; ++v) {
      auto& comp = comps[labels[v - 1]];
      if (comp.empty()) ++used;
      comp.push_back(v);
    }
    bool feasible = !cfg.max_components || used <= *cfg.max_components;
    for (int label = 1; feasible && label <= n; ++label) {
      const auto& comp = comps[label];
      if (comp.empty()) continue;
      const int need = static_cast<int>(comp.size()) - cfg.k;
      for (std::size_t a = 0; feasible && need > 0 && a < comp.size(); ++a) {
        int inside = 0;
        for (std::size_t b = 0; b < comp.size(); ++b)
          if (a != b && g.adjacent(comp[a], comp[b])) ++inside;
        feasible = inside >= need;
      }
      if (feasible && (cfg.lb || cfg.ub)) {
        double q_sum = 0.0;
        for (int v : comp) q_sum += g.node_weight(v);
        if (cfg.lb && q_sum < *cfg.lb) feasible = false;
        if (cfg.ub && q_sum > *cfg.ub) feasible = false;
      }
    }
    if (feasible) {
      double weight = 0.0;
      for (const auto& e : g.edges())
        if (labels[e.first - 1] == labels[e.second - 1]) weight += e.weight;
      if (!result.incumbent_value || weight > *result.incumbent_value) {
        result.incumbent_value = weight;
        result.partition = Partition(labels);
      }
    }
    for (int label = 1; label <= n; ++label) comps[label].clear();
  } while (next_restricted_growth(labels, max_prefix));

  if (result.incumbent_value) {
    result.status = SolveStatus::Optimal;
    result.best_bound = result.incumbent_value;
    result.d_gap = 0.0;
  }
  result.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

}  // namespace maxekpp
