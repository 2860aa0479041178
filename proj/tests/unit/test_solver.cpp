#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "maxekpp/kplex.hpp"
#include "maxekpp/solver.hpp"
#include "support.hpp"

using namespace maxekpp;
using testsupport::random_graph;
using testsupport::random_nonnegative_graph;

namespace {

SolverConfig config(int k) {
  SolverConfig cfg;
  cfg.k = k;
  return cfg;
}

bool feasible_for(const WeightedGraph& g, const Partition& p,
                  const SolverConfig& cfg) {
  return validate_partition(g, p, cfg.k, cfg).feasible();
}

}  // namespace

TEST_CASE("hand-checked instances") {
  const WeightedGraph g(4, {{1, 2, 10}, {1, 3, 5}, {2, 3, 20}, {3, 4, 1}});
  for (int k : {1, 2}) {
    const auto r = solve_exact(g, config(k));
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.incumbent_value == 35.0);
    CHECK(r.best_bound == 35.0);
    CHECK(r.d_gap == 0.0);
    REQUIRE(r.partition.has_value());
    CHECK(r.partition->labels() == std::vector<int>{1, 1, 1, 2});
    CHECK(r.nodes_explored > 0);
    CHECK(r.elapsed_s >= 0.0);
  }

  // Negative edges never pay for themselves, so singletons win.
  const WeightedGraph neg(4, {{1, 2, -3}, {2, 3, -1}, {3, 4, -7}});
  const auto r = solve_exact(neg, config(1));
  CHECK(r.incumbent_value == 0.0);
  CHECK(r.partition->labels() == std::vector<int>{1, 2, 3, 4});

  const WeightedGraph edgeless(3, {});
  const auto r2 = solve_exact(edgeless, config(2));
  CHECK(r2.status == SolveStatus::Optimal);
  CHECK(r2.incumbent_value == 0.0);
}

TEST_CASE("search agrees with exhaustive enumeration") {
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    for (int n : {5, 6, 7}) {
      const auto g = random_graph(n, 55, seed * 1000 + n);
      for (int k : {1, 2, 3}) {
        const auto cfg = config(k);
        const auto slow = brute_force_optimum(g, cfg);
        const auto fast = solve_exact(g, cfg);
        REQUIRE(slow.status == SolveStatus::Optimal);
        REQUIRE(fast.status == SolveStatus::Optimal);
        CHECK(fast.incumbent_value == slow.incumbent_value);
        CHECK(fast.partition->labels() == slow.partition->labels());
      }
    }
  }
}

TEST_CASE("search agrees with enumeration under side constraints") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(testsupport::draw(rng, 3));
    std::vector<double> q;
    for (int v = 0; v < n; ++v)
      q.push_back(1.0 + testsupport::draw(rng, 5));
    const auto base = random_graph(n, 50, rng());
    std::vector<WeightedEdge> edges;
    for (const auto& e : base.edges()) edges.push_back(e);
    const WeightedGraph g(n, std::move(edges), q);

    SolverConfig cfg;
    cfg.k = 1 + static_cast<int>(testsupport::draw(rng, 3));
    switch (testsupport::draw(rng, 4)) {
      case 0: cfg.lb = 2.0 + testsupport::draw(rng, 4); break;
      case 1: cfg.ub = 4.0 + testsupport::draw(rng, 8); break;
      case 2:
        cfg.lb = 2.0 + testsupport::draw(rng, 3);
        cfg.ub = *cfg.lb + testsupport::draw(rng, 6);
        break;
      default: break;
    }
    if (testsupport::draw(rng, 2) == 0)
      cfg.max_components = 1 + static_cast<int>(testsupport::draw(rng, 3));

    const auto slow = brute_force_optimum(g, cfg);
    const auto fast = solve_exact(g, cfg);
    REQUIRE(fast.status == slow.status);
    if (slow.status == SolveStatus::Optimal) {
      CHECK(fast.incumbent_value == slow.incumbent_value);
      CHECK(fast.partition->labels() == slow.partition->labels());
      CHECK(feasible_for(g, *fast.partition, cfg));
    }
  }
}

TEST_CASE("fractional weights stay exact") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 6;
    std::vector<WeightedEdge> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (testsupport::draw(rng, 100) < 55)
          edges.push_back(
              {i, j, (static_cast<double>(testsupport::draw(rng, 41)) - 20) / 2});
    const WeightedGraph g(n, std::move(edges));
    for (int k : {1, 2}) {
      const auto slow = brute_force_optimum(g, config(k));
      const auto fast = solve_exact(g, config(k));
      CHECK(fast.incumbent_value ==
            doctest::Approx(slow.incumbent_value.value()).epsilon(1e-12));
    }
  }
}

TEST_CASE("optimum is monotone in k") {
  for (std::uint32_t seed : {61u, 62u, 63u}) {
    const auto g = random_graph(8, 50, seed);
    double prev = -1e18;
    for (int k = 1; k <= 4; ++k) {
      const auto r = solve_exact(g, config(k));
      REQUIRE(r.status == SolveStatus::Optimal);
      CHECK(*r.incumbent_value >= prev);
      prev = *r.incumbent_value;
    }
  }
}

TEST_CASE("optimum is monotone in the component limit") {
  for (std::uint32_t seed : {71u, 72u}) {
    const auto g = random_nonnegative_graph(7, 55, seed);
    const auto unconstrained = solve_exact(g, config(1));
    std::optional<double> prev;
    for (int P = 1; P <= 7; ++P) {
      SolverConfig cfg = config(1);
      cfg.max_components = P;
      const auto r = solve_exact(g, cfg);
      if (r.status == SolveStatus::Infeasible) {
        CHECK(!prev.has_value());  // relaxing P never loses feasibility
        continue;
      }
      REQUIRE(r.status == SolveStatus::Optimal);
      if (prev) CHECK(*r.incumbent_value >= *prev);
      prev = r.incumbent_value;
    }
    // P = n constrains nothing.
    SolverConfig cfg = config(1);
    cfg.max_components = 7;
    CHECK(solve_exact(g, cfg).incumbent_value == unconstrained.incumbent_value);
  }
}

TEST_CASE("worker count changes neither status nor value") {
  for (std::uint32_t seed : {81u, 82u}) {
    const auto g = random_graph(11, 45, seed);
    for (int k : {1, 2}) {
      const auto reference = solve_exact(g, config(k));
      for (int workers : {2, 3}) {
        SolverConfig cfg = config(k);
        cfg.worker_count = workers;
        const auto r = solve_exact(g, cfg);
        CHECK(r.status == reference.status);
        CHECK(r.incumbent_value == reference.incumbent_value);
        REQUIRE(r.partition.has_value());
        CHECK(feasible_for(g, *r.partition, cfg));
        CHECK(partition_weight(g, *r.partition) == *r.incumbent_value);
      }
    }
  }
}

TEST_CASE("fast mode keeps the exact value") {
  for (std::uint32_t seed : {91u, 92u, 93u}) {
    const auto g = random_graph(9, 50, seed);
    const auto reference = solve_exact(g, config(2));
    SolverConfig cfg = config(2);
    cfg.deterministic = false;
    const auto r = solve_exact(g, cfg);
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.incumbent_value == reference.incumbent_value);
    CHECK(feasible_for(g, *r.partition, cfg));
  }
}

TEST_CASE("ties resolve to the canonically smallest partition") {
  const auto r = solve_exact(testsupport::complete_graph(5, 0.0), config(1));
  CHECK(r.partition->labels() == std::vector<int>{1, 1, 1, 1, 1});

  const auto r2 = solve_exact(testsupport::path_graph(4, 0.0), config(1));
  CHECK(r2.partition->labels() == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("infeasible side constraints are reported as such") {
  const WeightedGraph g(3, {{1, 2, 5}}, std::vector<double>{1, 2, 9});

  SolverConfig heavy_node = config(1);
  heavy_node.ub = 5.0;  // node 3 alone weighs 9
  CHECK(solve_exact(g, heavy_node).status == SolveStatus::Infeasible);

  SolverConfig lb_too_high = config(1);
  lb_too_high.lb = 13.0;  // total node weight is 12
  CHECK(solve_exact(g, lb_too_high).status == SolveStatus::Infeasible);

  const WeightedGraph isolated(2, {});
  SolverConfig one_comp = config(1);
  one_comp.max_components = 1;
  CHECK(solve_exact(isolated, one_comp).status == SolveStatus::Infeasible);
  CHECK(brute_force_optimum(isolated, one_comp).status ==
        SolveStatus::Infeasible);
  // The same pair is a valid 2-plex, so k = 2 makes it feasible again.
  one_comp.k = 2;
  const auto r = solve_exact(isolated, one_comp);
  CHECK(r.status == SolveStatus::Optimal);
  CHECK(r.partition->labels() == std::vector<int>{1, 1});
}

TEST_CASE("timeout yields a bound and a feasible incumbent if any") {
  const auto g = testsupport::hamming6_4().with_pullan_weights();

  SolverConfig cfg = config(2);
  cfg.time_limit_s = 0.05;
  const auto r = solve_exact(g, cfg);
  REQUIRE((r.status == SolveStatus::Feasible ||
           r.status == SolveStatus::Timeout));
  REQUIRE(r.best_bound.has_value());
  if (r.partition) {
    CHECK(feasible_for(g, *r.partition, cfg));
    CHECK(partition_weight(g, *r.partition) ==
          doctest::Approx(*r.incumbent_value));
    CHECK(*r.incumbent_value <= *r.best_bound);
    CHECK(*r.d_gap >= 0.0);
  }

  // The greedy start guarantees an incumbent even at a zero budget.
  SolverConfig fast = cfg;
  fast.deterministic = false;
  fast.time_limit_s = 0.01;
  const auto rf = solve_exact(g, fast);
  CHECK(rf.status == SolveStatus::Feasible);
  REQUIRE(rf.partition.has_value());
  CHECK(feasible_for(g, *rf.partition, fast));
}

TEST_CASE("configuration errors are rejected") {
  const auto g = testsupport::path_graph(3);
  SolverConfig cfg;
  cfg.k = 0;
  CHECK_THROWS_AS(solve_exact(g, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.worker_count = 0;
  CHECK_THROWS_AS(solve_exact(g, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.lb = 5.0;
  cfg.ub = 4.0;
  CHECK_THROWS_AS(solve_exact(g, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.time_limit_s = -1.0;
  CHECK_THROWS_AS(solve_exact(g, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.max_components = 0;
  CHECK_THROWS_AS(solve_exact(g, cfg), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_optimum(testsupport::path_graph(13), config(1)),
                  std::invalid_argument);
}

TEST_CASE("warm start never returns an infeasible partition") {
  std::mt19937 rng(333);
  int produced = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6 + static_cast<int>(testsupport::draw(rng, 5));
    const auto g = random_graph(n, 40 + testsupport::draw(rng, 40), rng());
    SolverConfig cfg = config(1 + testsupport::draw(rng, 3));
    if (testsupport::draw(rng, 3) == 0)
      cfg.max_components = 1 + static_cast<int>(testsupport::draw(rng, 4));
    if (testsupport::draw(rng, 3) == 0) cfg.ub = 3.0 + testsupport::draw(rng, 6);

    const auto warm = greedy_warm_start(g, cfg);
    if (!warm) continue;
    ++produced;
    CHECK(feasible_for(g, *warm, cfg));
    const auto exact = solve_exact(g, cfg);
    REQUIRE(exact.status == SolveStatus::Optimal);
    CHECK(partition_weight(g, *warm) <= *exact.incumbent_value + 1e-9);
  }
  CHECK(produced > 0);
}

TEST_CASE("gap guard cases") {
  CHECK(relative_gap(7.0, 7.0) == std::pair{0.0, false});
  CHECK(relative_gap(50.0, 100.0) == std::pair{50.0, false});
  CHECK(relative_gap(0.0, 80.0) == std::pair{100.0, false});
  CHECK(relative_gap(-3.0, 0.0) == std::pair{3.0, true});
  CHECK(relative_gap(-10.0, -5.0) == std::pair{5.0, true});
}
