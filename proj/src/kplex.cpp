#include "maxekpp/kplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace maxekpp {

bool is_kplex(const WeightedGraph& g, const std::vector<int>& members, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (members.empty()) throw std::invalid_argument("empty member set");
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate member");
  for (int v : sorted)
    if (v < 1 || v > g.node_count())
      throw std::invalid_argument("member " + std::to_string(v) +
                                  " outside 1.." + std::to_string(g.node_count()));
  const int need = static_cast<int>(sorted.size()) - k;
  if (need <= 0) return true;
  for (int v : sorted) {
    int inside = 0;
    for (int u : sorted)
      if (u != v && g.adjacent(u, v)) ++inside;
    if (inside < need) return false;
  }
  return true;
}

double partition_weight(const WeightedGraph& g, const Partition& p) {
  if (p.node_count() != g.node_count())
    throw std::invalid_argument("partition covers " +
                                std::to_string(p.node_count()) + " nodes, graph has " +
                                std::to_string(g.node_count()));
  double total = 0.0;
  for (const auto& e : g.edges())
    if (p.label(e.first) == p.label(e.second)) total += e.weight;
  return total;
}

ValidationReport validate_partition(const WeightedGraph& g, const Partition& p,
                                    int k, const SolverConfig& cfg) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (p.node_count() != g.node_count())
    throw std::invalid_argument("partition covers " +
                                std::to_string(p.node_count()) + " nodes, graph has " +
                                std::to_string(g.node_count()));
  ValidationReport report;
  const auto labels = p.used_labels();
  for (int label : labels) {
    const auto members = p.component(label);
    if (!is_kplex(g, members, k)) {
      const int need = static_cast<int>(members.size()) - k;
      std::string worst;
      for (int v : members) {
        int inside = 0;
        for (int u : members)
          if (u != v && g.adjacent(u, v)) ++inside;
        if (inside < need) {
          worst = "node " + std::to_string(v) + " has " + std::to_string(inside) +
                  " neighbors inside, needs " + std::to_string(need);
          break;
        }
      }
      report.violations.push_back({ViolationKind::NotKPlex, label, worst});
    }
    double q_sum = 0.0;
    for (int v : members) q_sum += g.node_weight(v);
    if (cfg.lb && q_sum < *cfg.lb)
      report.violations.push_back(
          {ViolationKind::BelowLowerBound, label,
           "node-weight sum " + std::to_string(q_sum) + " below lb"});
    if (cfg.ub && q_sum > *cfg.ub)
      report.violations.push_back(
          {ViolationKind::AboveUpperBound, label,
           "node-weight sum " + std::to_string(q_sum) + " above ub"});
  }
  if (cfg.max_components &&
      static_cast<int>(labels.size()) > *cfg.max_components)
    report.violations.push_back(
        {ViolationKind::TooManyComponents, 0,
         std::to_string(labels.size()) + " components, limit " +
             std::to_string(*cfg.max_components)});
  return report;
}

std::vector<int> spurious_components(const WeightedGraph& g, const Partition& p) {
  if (p.node_count() != g.node_count())
    throw std::invalid_argument("partition/graph node count mismatch");
  std::vector<int> out;
  for (int label : p.used_labels()) {
    const auto members = p.component(label);
    if (members.size() < 2) continue;
    bool any_edge = false;
    for (std::size_t a = 0; a < members.size() && !any_edge; ++a)
      for (std::size_t b = a + 1; b < members.size() && !any_edge; ++b)
        any_edge = g.adjacent(members[a], members[b]);
    if (!any_edge) out.push_back(label);
  }
  return out;
}

bool prop1_applies(const WeightedGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return g.all_weights_nonnegative() && k >= g.node_count() - g.min_degree();
}

PartitionStats partition_stats(const WeightedGraph& g, const Partition& p) {
  PartitionStats stats;
  const auto comps = p.components();
  stats.comp = static_cast<int>(comps.size());
  int singletons = 0;
  for (const auto& members : comps) {
    stats.largest = std::max(stats.largest, static_cast<int>(members.size()));
    if (members.size() == 1) ++singletons;
  }
  stats.singlt = 100.0 * singletons / p.node_count();
  stats.weight = partition_weight(g, p);
  return stats;
}

}  // namespace maxekpp
