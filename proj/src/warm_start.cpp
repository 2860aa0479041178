#include <algorithm>
#include <map>
#include <numeric>

#include "maxekpp/kplex.hpp"
#include "maxekpp/solver.hpp"

namespace maxekpp {

namespace {

struct GreedyState {
  const WeightedGraph& g;
  const SolverConfig& cfg;
  std::vector<int> comp_of;              // 1-based
  std::map<int, std::vector<int>> comps;  // label -> ascending members
  std::map<int, double> q_sum;
  int next_label;

  explicit GreedyState(const WeightedGraph& graph, const SolverConfig& config)
      : g(graph), cfg(config),
        comp_of(static_cast<std::size_t>(graph.node_count()) + 1, 0),
        next_label(graph.node_count() + 1) {
    for (int v = 1; v <= g.node_count(); ++v) {
      comp_of[v] = v;
      comps[v] = {v};
      q_sum[v] = g.node_weight(v);
    }
  }

  bool union_is_kplex(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    return is_kplex(g, merged, cfg.k);
  }

  bool merge_ok(int la, int lb) const {
    if (cfg.ub && q_sum.at(la) + q_sum.at(lb) > *cfg.ub) return false;
    return union_is_kplex(comps.at(la), comps.at(lb));
  }

  void merge(int la, int lb) {
    auto& a = comps[la];
    auto& b = comps[lb];
    std::vector<int> merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    for (int v : merged) comp_of[v] = la;
    a = std::move(merged);
    q_sum[la] += q_sum[lb];
    comps.erase(lb);
    q_sum.erase(lb);
  }

  double cross_weight(int la, int lb) const {
    double total = 0.0;
    for (int v : comps.at(la))
      for (const auto& nb : g.neighbors(v))
        if (comp_of[nb.node] == lb) total += nb.weight;
    return total;
  }

  double cross_weight_of_node(int v, int label) const {
    double total = 0.0;
    for (const auto& nb : g.neighbors(v))
      if (comp_of[nb.node] == label && nb.node != v) total += nb.weight;
    return total;
  }

  void relocate(int v, int from, int to) {
    auto& source = comps[from];
    source.erase(std::find(source.begin(), source.end(), v));
    if (source.empty()) {
      comps.erase(from);
      q_sum.erase(from);
    } else {
      q_sum[from] -= g.node_weight(v);
    }
    auto& target = comps[to];
    target.insert(std::lower_bound(target.begin(), target.end(), v), v);
    q_sum[to] += g.node_weight(v);
    comp_of[v] = to;
  }

  Partition partition() const {
    std::vector<int> labels(static_cast<std::size_t>(g.node_count()));
    for (int v = 1; v <= g.node_count(); ++v) labels[v - 1] = comp_of[v];
    return Partition(std::move(labels)).canonicalized();
  }
};

}  // namespace

std::optional<Partition> greedy_warm_start(const WeightedGraph& g,
                                           const SolverConfig& cfg) {
  validate_config(cfg);
  // A node too heavy for ub cannot live in any component.
  if (cfg.ub)
    for (int v = 1; v <= g.node_count(); ++v)
      if (g.node_weight(v) > *cfg.ub) return std::nullopt;

  GreedyState state(g, cfg);

  // Merge along positive edges, heaviest first, until nothing applies.
  std::vector<WeightedEdge> by_weight = g.edges();
  std::stable_sort(by_weight.begin(), by_weight.end(),
                   [](const auto& a, const auto& b) { return a.weight > b.weight; });
  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    for (const auto& e : by_weight) {
      if (e.weight <= 0.0) break;
      const int la = state.comp_of[e.first];
      const int lb = state.comp_of[e.second];
      if (la == lb) continue;
      if (state.merge_ok(la, lb)) {
        state.merge(std::min(la, lb), std::max(la, lb));
        merged_any = true;
      }
    }
  }

  // Repair passes accept weight-losing merges when the side constraints
  // demand fewer or heavier components.
  const auto best_feasible_merge = [&](auto&& candidate_filter) {
    std::pair<int, int> best{0, 0};
    double best_gain = 0.0;
    bool found = false;
    for (auto ita = state.comps.begin(); ita != state.comps.end(); ++ita)
      for (auto itb = std::next(ita); itb != state.comps.end(); ++itb) {
        if (!candidate_filter(ita->first, itb->first)) continue;
        if (!state.merge_ok(ita->first, itb->first)) continue;
        const double gain = state.cross_weight(ita->first, itb->first);
        if (!found || gain > best_gain) {
          best = {ita->first, itb->first};
          best_gain = gain;
          found = true;
        }
      }
    return found ? std::optional(best) : std::nullopt;
  };

  if (cfg.max_components) {
    while (static_cast<int>(state.comps.size()) > *cfg.max_components) {
      auto merge = best_feasible_merge([](int, int) { return true; });
      if (!merge) return std::nullopt;
      state.merge(merge->first, merge->second);
    }
  }
  if (cfg.lb) {
    const auto deficient = [&](int label) { return state.q_sum.at(label) < *cfg.lb; };
    while (true) {
      bool any_deficient = false;
      for (const auto& [label, members] : state.comps)
        if (deficient(label)) any_deficient = true;
      if (!any_deficient) break;
      auto merge = best_feasible_merge(
          [&](int la, int lb) { return deficient(la) || deficient(lb); });
      if (!merge) return std::nullopt;
      state.merge(merge->first, merge->second);
    }
  }

  // Single-node relocation, strict improvements only. Removing a node
  // never breaks the k-plex condition of what remains, so only the target
  // side and the source lb need checking.
  const int n = g.node_count();
  for (int pass = 0; pass < 2 * n; ++pass) {
    bool improved = false;
    for (int v = 1; v <= n; ++v) {
      const int from = state.comp_of[v];
      const double loss = state.cross_weight_of_node(v, from);
      const bool empties_source = state.comps.at(from).size() == 1;
      if (!empties_source && cfg.lb &&
          state.q_sum.at(from) - g.node_weight(v) < *cfg.lb)
        continue;
      for (const auto& [to, members] : state.comps) {
        if (to == from) continue;
        const double gain = state.cross_weight_of_node(v, to);
        if (gain - loss <= 0.0) continue;
        if (cfg.ub && state.q_sum.at(to) + g.node_weight(v) > *cfg.ub) continue;
        std::vector<int> target = members;
        target.insert(std::lower_bound(target.begin(), target.end(), v), v);
        if (!is_kplex(g, target, cfg.k)) continue;
        state.relocate(v, from, to);
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }

  return state.partition();
}

}  // namespace maxekpp
