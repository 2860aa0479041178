#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "maxekpp/kplex.hpp"
#include "maxekpp/solver.hpp"

namespace maxekpp {

namespace {

constexpr std::uint64_t kCheckMask = 8191;  // deadline check period - 1
constexpr double kQTol = 1e-9;              // slack for node-weight sums

double improvement_slack(double value, bool integral) {
  return integral ? 0.0 : 1e-9 * std::max(1.0, std::fabs(value));
}

// Exact maximum clique size on at most 64 vertices, adjacency as bit rows.
int max_clique_64(const std::vector<std::uint64_t>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  // Iterative-deepening-free expansion with a popcount cutoff; subgraphs
  // here are small neighborhoods, so this stays cheap.
  struct Frame {
    std::uint64_t cand;
    int size;
  };
  std::vector<Frame> stack;
  stack.push_back({(n == 64) ? ~std::uint64_t{0}
                             : ((std::uint64_t{1} << n) - 1),
                   0});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.size > best) best = f.size;
    while (f.cand) {
      if (f.size + std::popcount(f.cand) <= best) break;
      const int v = std::countr_zero(f.cand);
      f.cand &= f.cand - 1;
      stack.push_back({f.cand, f.size});
      f.cand &= adj[v];
      f.size += 1;
      if (f.size > best) best = f.size;
    }
  }
  return best;
}

// Number of colors a greedy sweep needs; an upper bound on the clique
// number of the subgraph.
int greedy_color_bound(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  int used = 0;
  std::vector<char> taken;
  for (int v = 0; v < n; ++v) {
    taken.assign(static_cast<std::size_t>(used) + 1, 0);
    for (int u : adj[v])
      if (color[u] >= 0) taken[color[u]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

// Upper bound on the clique number of the subgraph induced by the
// neighborhood of v; exact when the neighborhood has at most 64 nodes.
int neighborhood_clique_bound(const WeightedGraph& g, int v) {
  const auto nbrs = g.neighbors(v);
  const int d = static_cast<int>(nbrs.size());
  if (d <= 1) return d;
  if (d <= 64) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(d), 0);
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (g.adjacent(nbrs[a].node, nbrs[b].node)) {
          adj[a] |= std::uint64_t{1} << b;
          adj[b] |= std::uint64_t{1} << a;
        }
    return max_clique_64(adj);
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (g.adjacent(nbrs[a].node, nbrs[b].node)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  return greedy_color_bound(adj);
}

struct Shared {
  std::mutex m;
  bool has_incumbent = false;
  double incumbent = 0.0;
  std::vector<int> best_labels;  // labels[i] for node i+1
  std::atomic<bool> has_incumbent_fast{false};
  std::atomic<double> incumbent_fast{0.0};
  std::atomic<bool> abort{false};
  std::atomic<std::uint64_t> nodes{0};
  bool has_frontier_bound = false;
  double frontier_bound = 0.0;
  bool has_deadline = false;
  std::chrono::steady_clock::time_point deadline;
  bool integral = false;

  void offer(double value, const std::vector<int>& labels) {
    std::lock_guard lock(m);
    if (!has_incumbent || value > incumbent) {
      has_incumbent = true;
      incumbent = value;
      best_labels = labels;
      incumbent_fast.store(value, std::memory_order_relaxed);
      has_incumbent_fast.store(true, std::memory_order_relaxed);
    }
  }

  void fold_frontier(double bound) {
    std::lock_guard lock(m);
    if (!has_frontier_bound || bound > frontier_bound) {
      has_frontier_bound = true;
      frontier_bound = bound;
    }
  }

  bool prune(double bound, bool integral) const {
    if (!has_incumbent_fast.load(std::memory_order_relaxed)) return false;
    const double inc = incumbent_fast.load(std::memory_order_relaxed);
    return bound <= inc + improvement_slack(inc, integral);
  }
};

struct Comp {
  std::vector<int> members;
  double q_sum = 0.0;
};

struct AttachOld {
  std::size_t idx;
  int cnt;
  double pos;
  double full;
};

struct UndoLog {
  std::vector<AttachOld> attach;
  std::vector<std::pair<int, double>> future_old;  // node, old ub_future
  std::vector<int> miss_bumped;
  std::vector<int> complist_appended;
  double weight_old = 0.0;
  double bsum_old = 0.0;
  double deficit_old = 0.0;
  double remaining_old = 0.0;
  double q_sum_old = 0.0;
  double phi_old = 0.0;
  bool created = false;
};

class Search {
 public:
  Search(const WeightedGraph& g, const SolverConfig& cfg, Shared& shared,
         bool reports_progress)
      : g_(g),
        cfg_(cfg),
        shared_(shared),
        n_(g.node_count()),
        k_(cfg.k),
        integral_(g.integral_weights()),
        reports_progress_(reports_progress) {
    order_.resize(static_cast<std::size_t>(n_));
    for (int v = 1; v <= n_; ++v) order_[v - 1] = v;
    if (!cfg_.deterministic) {
      std::vector<double> wdeg(static_cast<std::size_t>(n_) + 1, 0.0);
      for (const auto& e : g_.edges()) {
        wdeg[e.first] += std::fabs(e.weight);
        wdeg[e.second] += std::fabs(e.weight);
      }
      std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
        if (wdeg[a] != wdeg[b]) return wdeg[a] > wdeg[b];
        return a < b;
      });
    }

    q_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
    for (int v = 1; v <= n_; ++v) {
      q_[v] = g_.node_weight(v);
      remaining_q_ += q_[v];
    }

    const std::size_t cells = static_cast<std::size_t>(n_ + 1) * n_;
    attach_cnt_.assign(cells, 0);
    attach_pos_.assign(cells, 0.0);
    attach_full_.assign(cells, 0.0);
    comp_of_.assign(static_cast<std::size_t>(n_) + 1, -1);
    assigned_.assign(static_cast<std::size_t>(n_) + 1, 0);
    miss_.assign(static_cast<std::size_t>(n_) + 1, 0);
    complist_.assign(static_cast<std::size_t>(n_) + 1, {});
    logs_.resize(static_cast<std::size_t>(n_));
    kid_bufs_.resize(static_cast<std::size_t>(n_));

    pos_adj_.assign(static_cast<std::size_t>(n_) + 1, {});
    cap_.assign(static_cast<std::size_t>(n_) + 1, 0);
    ub_future_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
    for (int v = 1; v <= n_; ++v) {
      for (const auto& nb : g_.neighbors(v))
        if (nb.weight > 0.0) pos_adj_[v].push_back(nb);
      std::stable_sort(pos_adj_[v].begin(), pos_adj_[v].end(),
                       [](const Neighbor& a, const Neighbor& b) {
                         if (a.weight != b.weight) return a.weight > b.weight;
                         return a.node < b.node;
                       });
      // In a clique component the co-members of v form a clique inside
      // N(v), so its clique number caps how many incident edges v can
      // keep. No such cap helps for k >= 2.
      cap_[v] = (k_ == 1) ? neighborhood_clique_bound(g_, v)
                          : static_cast<int>(pos_adj_[v].size());
      ub_future_[v] = recompute_future(v);
      b_sum_ += ub_future_[v];
    }
    if (k_ == 1) compute_phi();
    root_bound_ = bound_from(0);
  }

  double root_bound() const { return root_bound_; }
  std::uint64_t unflushed_nodes() const { return local_nodes_ - flushed_nodes_; }

  void finish() {
    shared_.nodes.fetch_add(unflushed_nodes());
    flushed_nodes_ = local_nodes_;
  }

  // Drives the search below a frontier prefix (empty = whole tree).
  void run_from(const std::vector<int>& prefix) {
    replay(prefix);
    const double bnd = bound_from(static_cast<int>(prefix.size()));
    if (!shared_.prune(bnd, integral_)) {
      const Walk walk = dfs(static_cast<int>(prefix.size()));
      if (walk == Walk::AbortedUnexplored) shared_.fold_frontier(bnd);
    }
    unwind(prefix);
  }

  // Valid upper bound for everything below the prefix.
  double prefix_bound(const std::vector<int>& prefix) {
    replay(prefix);
    const double bnd = static_cast<int>(prefix.size()) == n_
                           ? current_weight_
                           : bound_from(static_cast<int>(prefix.size()));
    unwind(prefix);
    return bnd;
  }

  // Breadth-first split of the tree into independent subtree prefixes.
  // Leaves met along the way are evaluated directly. Uses feasibility
  // checks only, so the union of the returned prefixes covers the
  // remaining space exactly.
  std::vector<std::vector<int>> collect_frontier(std::size_t target) {
    std::deque<std::vector<int>> queue;
    queue.push_back({});
    while (!queue.empty() && queue.size() < target &&
           static_cast<int>(queue.front().size()) < n_) {
      std::vector<int> prefix = std::move(queue.front());
      queue.pop_front();
      replay(prefix);
      const int depth = static_cast<int>(prefix.size());
      const int v = order_[depth];
      const int ncomps = static_cast<int>(comps_.size());
      for (int c = 0; c <= ncomps; ++c) {
        if (c < ncomps && !can_join(v, c)) continue;
        if (c == ncomps && cfg_.max_components && ncomps >= *cfg_.max_components)
          continue;
        apply(depth, v, c);
        const bool dead = deficit_sum_ > remaining_q_ + kQTol;
        if (!dead) {
          if (depth + 1 == n_) {
            record_leaf();
          } else {
            prefix.push_back(c);
            queue.push_back(prefix);
            prefix.pop_back();
          }
        }
        undo(depth, v, c);
      }
      unwind(prefix);
    }
    return {queue.begin(), queue.end()};
  }

 private:
  enum class Walk { Done, AbortedUnexplored, AbortedFolded };

  std::size_t flat(int node, int comp) const {
    return static_cast<std::size_t>(node) * n_ + comp;
  }

  double recompute_future(int v) const {
    double total = 0.0;
    int counted = 0;
    for (const auto& nb : pos_adj_[v]) {
      if (counted >= cap_[v]) break;
      if (assigned_[nb.node]) continue;
      total += nb.weight;
      ++counted;
    }
    return total;
  }

  // phi_[v] = max over cliques Q containing v of w(Q) / |Q|, at least 0
  // via the singleton. Any clique partition satisfies
  //   sum_Q w(Q) = sum_Q sum_{v in Q} w(Q)/|Q| <= sum_v phi_[v],
  // and cliques of a subgraph are cliques of g, so the root values stay
  // valid bounds for the unassigned residue throughout the search.
  // Enumeration cost is budgeted; on blowup the term is disabled and
  // bound_from falls back to the pairwise half-sum alone.
  void compute_phi() {
    phi_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
    long long budget = 20'000'000;
    std::vector<int> chosen;
    std::vector<double> weight_stack;
    for (int v = 1; v <= n_ && budget > 0; ++v) {
      const auto nbrs = g_.neighbors(v);
      const int d = static_cast<int>(nbrs.size());
      double best = 0.0;
      chosen.clear();
      weight_stack.assign(1, 0.0);
      const auto expand = [&](auto&& self, int start) -> void {
        for (int idx = start; idx < d && budget > 0; ++idx) {
          --budget;
          const int u = nbrs[idx].node;
          bool joined = true;
          for (int c : chosen)
            if (!g_.adjacent(c, u)) { joined = false; break; }
          if (!joined) continue;
          double gain = nbrs[idx].weight;
          for (int c : chosen) gain += g_.edge_weight(c, u);
          chosen.push_back(u);
          weight_stack.push_back(weight_stack.back() + gain);
          const double average =
              weight_stack.back() / (static_cast<double>(chosen.size()) + 1.0);
          if (average > best) best = average;
          if (static_cast<int>(chosen.size()) < cap_[v]) self(self, idx + 1);
          chosen.pop_back();
          weight_stack.pop_back();
        }
      };
      expand(expand, 0);
      phi_[v] = best;
      phi_sum_ += best;
    }
    use_phi_ = budget > 0;
  }

  bool can_join(int v, int c) const {
    const Comp& comp = comps_[c];
    if (cfg_.ub && comp.q_sum + q_[v] > *cfg_.ub + kQTol) return false;
    const int miss_v =
        static_cast<int>(comp.members.size()) - attach_cnt_[flat(v, c)];
    if (miss_v > k_ - 1) return false;
    if (miss_v > 0)
      for (int u : comp.members)
        if (miss_[u] == k_ - 1 && !g_.adjacent(u, v)) return false;
    return true;
  }

  void apply(int depth, int v, int c) {
    UndoLog& log = logs_[depth];
    log.attach.clear();
    log.future_old.clear();
    log.miss_bumped.clear();
    log.complist_appended.clear();
    log.weight_old = current_weight_;
    log.bsum_old = b_sum_;
    log.deficit_old = deficit_sum_;
    log.remaining_old = remaining_q_;
    log.created = (c == static_cast<int>(comps_.size()));
    if (log.created) comps_.push_back({});
    Comp& comp = comps_[c];
    log.q_sum_old = comp.q_sum;

    miss_[v] = static_cast<int>(comp.members.size()) - attach_cnt_[flat(v, c)];
    if (miss_[v] > 0)
      for (int u : comp.members)
        if (!g_.adjacent(u, v)) {
          ++miss_[u];
          log.miss_bumped.push_back(u);
        }
    current_weight_ += attach_full_[flat(v, c)];
    if (cfg_.lb) {
      // A component contributes no deficit before it exists.
      const double before =
          log.created ? 0.0 : std::max(0.0, *cfg_.lb - comp.q_sum);
      const double after = std::max(0.0, *cfg_.lb - comp.q_sum - q_[v]);
      deficit_sum_ += after - before;
    }
    comp.q_sum += q_[v];
    comp.members.push_back(v);
    remaining_q_ -= q_[v];
    comp_of_[v] = c;
    assigned_[v] = 1;

    b_sum_ -= ub_future_[v];
    log.phi_old = phi_sum_;
    if (use_phi_) phi_sum_ -= phi_[v];
    for (const auto& nb : g_.neighbors(v)) {
      const int u = nb.node;
      if (assigned_[u]) continue;
      const std::size_t idx = flat(u, c);
      log.attach.push_back({idx, attach_cnt_[idx], attach_pos_[idx],
                            attach_full_[idx]});
      attach_cnt_[idx] += 1;
      attach_full_[idx] += nb.weight;
      if (nb.weight > 0.0) {
        if (attach_pos_[idx] == 0.0) {
          complist_[u].push_back(c);
          log.complist_appended.push_back(u);
        }
        attach_pos_[idx] += nb.weight;
        const double fresh = recompute_future(u);
        if (fresh != ub_future_[u]) {
          log.future_old.push_back({u, ub_future_[u]});
          b_sum_ += fresh - ub_future_[u];
          ub_future_[u] = fresh;
        }
      }
    }
  }

  void undo(int depth, int v, int c) {
    UndoLog& log = logs_[depth];
    for (auto it = log.future_old.rbegin(); it != log.future_old.rend(); ++it)
      ub_future_[it->first] = it->second;
    for (auto it = log.complist_appended.rbegin();
         it != log.complist_appended.rend(); ++it)
      complist_[*it].pop_back();
    for (auto it = log.attach.rbegin(); it != log.attach.rend(); ++it) {
      attach_cnt_[it->idx] = it->cnt;
      attach_pos_[it->idx] = it->pos;
      attach_full_[it->idx] = it->full;
    }
    for (int u : log.miss_bumped) --miss_[u];
    Comp& comp = comps_[c];
    comp.members.pop_back();
    comp.q_sum = log.q_sum_old;
    if (log.created) comps_.pop_back();
    comp_of_[v] = -1;
    assigned_[v] = 0;
    current_weight_ = log.weight_old;
    b_sum_ = log.bsum_old;
    phi_sum_ = log.phi_old;
    deficit_sum_ = log.deficit_old;
    remaining_q_ = log.remaining_old;
  }

  void replay(const std::vector<int>& prefix) {
    for (std::size_t t = 0; t < prefix.size(); ++t)
      apply(static_cast<int>(t), order_[t], prefix[t]);
  }

  void unwind(const std::vector<int>& prefix) {
    for (std::size_t t = prefix.size(); t-- > 0;)
      undo(static_cast<int>(t), order_[t], prefix[t]);
  }

  // Upper bound with nodes at positions < first_unassigned assigned:
  // current weight, plus for every unassigned node the best positive
  // attachment to a component it could still join, plus a cap on the
  // weight still collectible among unassigned nodes: the smaller of half
  // the pairwise future sums and, for k = 1, the clique-average sum.
  // Floored when the weights are integral.
  double bound_from(int first_unassigned) const {
    double a_sum = 0.0;
    for (int pos = first_unassigned; pos < n_; ++pos) {
      const int u = order_[pos];
      double best = 0.0;
      for (int ci : complist_[u]) {
        const double ap = attach_pos_[flat(u, ci)];
        if (ap <= best) continue;
        const Comp& comp = comps_[ci];
        if (static_cast<int>(comp.members.size()) - attach_cnt_[flat(u, ci)] >
            k_ - 1)
          continue;
        if (cfg_.ub && comp.q_sum + q_[u] > *cfg_.ub + kQTol) continue;
        best = ap;
      }
      a_sum += best;
    }
    double b_part = 0.5 * b_sum_;
    if (use_phi_ && phi_sum_ < b_part) b_part = phi_sum_;
    double bound = current_weight_ + a_sum + b_part;
    if (integral_) bound = std::floor(bound + 1e-6);
    return bound;
  }

  void record_leaf() {
    std::vector<int> labels(static_cast<std::size_t>(n_));
    for (int v = 1; v <= n_; ++v) labels[v - 1] = comp_of_[v] + 1;
    shared_.offer(current_weight_, labels);
  }

  void on_check_point() {
    shared_.nodes.fetch_add(local_nodes_ - flushed_nodes_);
    flushed_nodes_ = local_nodes_;
    if (shared_.has_deadline &&
        std::chrono::steady_clock::now() >= shared_.deadline)
      shared_.abort.store(true, std::memory_order_relaxed);
    if (reports_progress_ && cfg_.progress_node_interval > 0) {
      const std::uint64_t nodes = shared_.nodes.load();
      if (nodes - last_progress_ >= cfg_.progress_node_interval) {
        last_progress_ = nodes;
        if (shared_.has_incumbent_fast.load(std::memory_order_relaxed)) {
          const double lb = shared_.incumbent_fast.load(std::memory_order_relaxed);
          const auto [gap, absolute] = relative_gap(lb, root_bound_);
          std::fprintf(stderr, "nodes=%llu LB=%.6g UB=%.6g gap=%.3f%s\n",
                       static_cast<unsigned long long>(nodes), lb, root_bound_,
                       gap, absolute ? " (absolute)" : "%");
        } else {
          std::fprintf(stderr, "nodes=%llu LB=- UB=%.6g\n",
                       static_cast<unsigned long long>(nodes), root_bound_);
        }
      }
    }
  }

  Walk dfs(int depth) {
    ++local_nodes_;
    if ((local_nodes_ & kCheckMask) == 0) on_check_point();
    if (shared_.abort.load(std::memory_order_relaxed))
      return Walk::AbortedUnexplored;
    if (depth == n_) {
      record_leaf();
      return Walk::Done;
    }
    const int v = order_[depth];
    auto& kids = kid_bufs_[depth];
    kids.clear();
    const int ncomps = static_cast<int>(comps_.size());
    for (int c = 0; c < ncomps; ++c)
      if (can_join(v, c)) kids.push_back(c);
    if (!cfg_.max_components || ncomps < *cfg_.max_components)
      kids.push_back(ncomps);
    if (!cfg_.deterministic)
      std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) {
        const double fa = a < ncomps ? attach_full_[flat(v, a)] : 0.0;
        const double fb = b < ncomps ? attach_full_[flat(v, b)] : 0.0;
        return fa > fb;
      });

    for (std::size_t i = 0; i < kids.size(); ++i) {
      const int c = kids[i];
      apply(depth, v, c);
      bool pruned = deficit_sum_ > remaining_q_ + kQTol;
      double bnd = 0.0;
      if (!pruned) {
        bnd = bound_from(depth + 1);
        pruned = shared_.prune(bnd, integral_);
      }
      if (!pruned) {
        const Walk walk = dfs(depth + 1);
        if (walk != Walk::Done) {
          if (walk == Walk::AbortedUnexplored) shared_.fold_frontier(bnd);
          undo(depth, v, c);
          fold_untried(depth, v, kids, i + 1);
          return Walk::AbortedFolded;
        }
      }
      undo(depth, v, c);
    }
    return Walk::Done;
  }

  void fold_untried(int depth, int v, const std::vector<int>& kids,
                    std::size_t from) {
    for (std::size_t i = from; i < kids.size(); ++i) {
      apply(depth, v, kids[i]);
      if (deficit_sum_ <= remaining_q_ + kQTol)
        shared_.fold_frontier(bound_from(depth + 1));
      undo(depth, v, kids[i]);
    }
  }

  const WeightedGraph& g_;
  const SolverConfig& cfg_;
  Shared& shared_;
  const int n_;
  const int k_;
  const bool integral_;
  const bool reports_progress_;

  std::vector<int> order_;
  std::vector<double> q_;
  std::vector<Comp> comps_;
  std::vector<int> comp_of_;
  std::vector<char> assigned_;
  std::vector<int> miss_;
  std::vector<int> attach_cnt_;
  std::vector<double> attach_pos_;
  std::vector<double> attach_full_;
  std::vector<std::vector<int>> complist_;
  std::vector<std::vector<Neighbor>> pos_adj_;
  std::vector<int> cap_;
  std::vector<double> ub_future_;
  std::vector<double> phi_;
  std::vector<UndoLog> logs_;
  std::vector<std::vector<int>> kid_bufs_;

  double current_weight_ = 0.0;
  double b_sum_ = 0.0;
  double phi_sum_ = 0.0;
  bool use_phi_ = false;
  double deficit_sum_ = 0.0;
  double remaining_q_ = 0.0;
  double root_bound_ = 0.0;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t flushed_nodes_ = 0;
  std::uint64_t last_progress_ = 0;
};

}  // namespace

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "OPTIMAL";
    case SolveStatus::Feasible: return "FEASIBLE";
    case SolveStatus::Infeasible: return "INFEASIBLE";
    case SolveStatus::Timeout: return "TIMEOUT";
  }
  return "INFEASIBLE";
}

std::pair<double, bool> relative_gap(double lb, double ub) {
  if (lb == ub) return {0.0, false};
  if (ub > 0.0) return {(ub - lb) / ub * 100.0, false};
  return {ub - lb, true};
}

SolveResult solve_exact(const WeightedGraph& g, const SolverConfig& cfg) {
  validate_config(cfg);
  const auto started = std::chrono::steady_clock::now();

  Shared shared;
  shared.integral = g.integral_weights();
  if (cfg.time_limit_s) {
    shared.has_deadline = true;
    shared.deadline =
        started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*cfg.time_limit_s));
  }

  SolveResult result;
  const auto finish = [&] {
    result.nodes_explored = shared.nodes.load();
    result.elapsed_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    return result;
  };

  // A node heavier than ub fits in no component at all.
  if (cfg.ub)
    for (int v = 1; v <= g.node_count(); ++v)
      if (g.node_weight(v) > *cfg.ub + kQTol) {
        result.status = SolveStatus::Infeasible;
        return finish();
      }

  // In deterministic mode a seeded incumbent could outprune the
  // lexicographically smallest co-optimum, so the search starts cold.
  if (!cfg.deterministic) {
    if (auto warm = greedy_warm_start(g, cfg)) {
      shared.offer(partition_weight(g, *warm), warm->labels());
    }
  }

  if (cfg.worker_count == 1) {
    Search search(g, cfg, shared, true);
    search.run_from({});
    search.finish();
  } else {
    Search splitter(g, cfg, shared, false);
    const std::size_t target = std::min<std::size_t>(
        4096,
        std::max<std::size_t>(128, static_cast<std::size_t>(cfg.worker_count) * 32));
    const auto prefixes = splitter.collect_frontier(target);
    splitter.finish();
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(cfg.worker_count));
    for (int w = 0; w < cfg.worker_count; ++w)
      workers.emplace_back([&, w] {
        Search search(g, cfg, shared, w == 0);
        for (;;) {
          if (shared.abort.load(std::memory_order_relaxed)) break;
          const std::size_t i = next.fetch_add(1);
          if (i >= prefixes.size()) break;
          search.run_from(prefixes[i]);
        }
        search.finish();
      });
    for (auto& worker : workers) worker.join();
    // Subtrees nobody claimed still cap the optimum on a timeout.
    if (shared.abort.load()) {
      const std::size_t claimed = std::min(next.load(), prefixes.size());
      for (std::size_t i = claimed; i < prefixes.size(); ++i)
        shared.fold_frontier(splitter.prefix_bound(prefixes[i]));
      splitter.finish();
    }
  }

  const bool timed_out = shared.abort.load();
  if (shared.has_incumbent) {
    result.incumbent_value = shared.incumbent;
    result.partition = Partition(shared.best_labels).canonicalized();
    if (!timed_out) {
      result.status = SolveStatus::Optimal;
      result.best_bound = shared.incumbent;
      result.d_gap = 0.0;
    } else {
      result.status = SolveStatus::Feasible;
      double bound = shared.incumbent;
      if (shared.has_frontier_bound)
        bound = std::max(bound, shared.frontier_bound);
      result.best_bound = bound;
      const auto [gap, absolute] = relative_gap(shared.incumbent, bound);
      result.d_gap = gap;
      result.d_gap_absolute = absolute;
    }
  } else if (timed_out) {
    result.status = SolveStatus::Timeout;
    if (shared.has_frontier_bound) result.best_bound = shared.frontier_bound;
  } else {
    result.status = SolveStatus::Infeasible;
  }
  return finish();
}

}  // namespace maxekpp
