#include <stdexcept>

#include "doctest.h"
#include "maxekpp/kplex.hpp"
#include "support.hpp"

using maxekpp::Partition;
using maxekpp::SolverConfig;
using maxekpp::WeightedGraph;

TEST_CASE("is_kplex basics") {
  const auto k5 = testsupport::complete_graph(5);
  CHECK(maxekpp::is_kplex(k5, {1, 2, 3, 4, 5}, 1));

  const auto path = testsupport::path_graph(4);
  CHECK(maxekpp::is_kplex(path, {1, 2}, 1));
  CHECK_FALSE(maxekpp::is_kplex(path, {1, 2, 3}, 1));
  CHECK(maxekpp::is_kplex(path, {1, 2, 3}, 2));
  CHECK_FALSE(maxekpp::is_kplex(path, {1, 2, 3, 4}, 2));
  CHECK(maxekpp::is_kplex(path, {1, 2, 3, 4}, 3));

  // Sets no larger than k are k-plexes regardless of edges.
  CHECK(maxekpp::is_kplex(path, {1, 4}, 2));
  CHECK(maxekpp::is_kplex(path, {1, 3}, 3));
  CHECK_FALSE(maxekpp::is_kplex(path, {1, 3}, 1));

  // A star: the hub sees everyone, leaves see only the hub.
  const WeightedGraph star(5, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {1, 5, 1}});
  CHECK_FALSE(maxekpp::is_kplex(star, {1, 2, 3, 4, 5}, 2));
  CHECK(maxekpp::is_kplex(star, {1, 2, 3, 4, 5}, 4));
  CHECK(maxekpp::is_kplex(star, {1, 2, 3}, 2));
}

TEST_CASE("is_kplex argument checks") {
  const auto g = testsupport::path_graph(3);
  CHECK_THROWS_AS(maxekpp::is_kplex(g, {1, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(maxekpp::is_kplex(g, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(maxekpp::is_kplex(g, {1, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(maxekpp::is_kplex(g, {0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(maxekpp::is_kplex(g, {4}, 1), std::invalid_argument);
}

TEST_CASE("k = 1 components are exactly cliques") {
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    const auto g = testsupport::random_graph(8, 50, seed);
    std::mt19937 rng(seed * 977);
    std::vector<int> members;
    for (int v = 1; v <= 8; ++v)
      if (testsupport::draw(rng, 2)) members.push_back(v);
    if (members.empty()) members.push_back(1);
    bool clique = true;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        clique = clique && g.adjacent(members[a], members[b]);
    CHECK(maxekpp::is_kplex(g, members, 1) == clique);
  }
}

TEST_CASE("k-plexes are monotone in k and hereditary") {
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    const auto g = testsupport::random_graph(9, 55, seed);
    const std::vector<int> everyone{1, 2, 3, 4, 5, 6, 7, 8, 9};
    for (int k = 1; k < 9; ++k)
      if (maxekpp::is_kplex(g, everyone, k))
        CHECK(maxekpp::is_kplex(g, everyone, k + 1));
    // Deleting one node preserves the property.
    for (int k = 1; k <= 3; ++k)
      if (maxekpp::is_kplex(g, everyone, k)) {
        std::vector<int> smaller(everyone.begin() + 1, everyone.end());
        CHECK(maxekpp::is_kplex(g, smaller, k));
      }
  }
}

TEST_CASE("partition weight sums intra edges only") {
  WeightedGraph g(4, {{1, 2, 5.0}, {2, 3, -2.0}, {3, 4, 7.5}, {1, 4, 1.0}});
  CHECK(maxekpp::partition_weight(g, Partition({1, 1, 2, 2})) == 12.5);
  CHECK(maxekpp::partition_weight(g, Partition({1, 1, 1, 1})) == 11.5);
  CHECK(maxekpp::partition_weight(g, Partition::singletons(4)) == 0.0);
  CHECK(maxekpp::partition_weight(g, Partition({1, 2, 2, 1})) == -1.0);
  CHECK_THROWS_AS(maxekpp::partition_weight(g, Partition({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("validate_partition reports each violation kind") {
  const auto path = testsupport::path_graph(4);
  SolverConfig cfg;

  CHECK(maxekpp::validate_partition(path, Partition({1, 1, 2, 2}), 1, cfg)
            .feasible());

  const auto bad = maxekpp::validate_partition(path, Partition({1, 1, 1, 1}), 1, cfg);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].kind == maxekpp::ViolationKind::NotKPlex);
  CHECK(bad.violations[0].component_label == 1);

  SolverConfig bounded;
  bounded.lb = 2.0;
  const auto low =
      maxekpp::validate_partition(path, Partition({1, 1, 2, 3}), 1, bounded);
  REQUIRE(low.violations.size() == 2);
  CHECK(low.violations[0].kind == maxekpp::ViolationKind::BelowLowerBound);
  CHECK(low.violations[0].component_label == 2);
  CHECK(low.violations[1].component_label == 3);

  SolverConfig capped;
  capped.ub = 1.0;
  const auto high =
      maxekpp::validate_partition(path, Partition({1, 1, 2, 3}), 1, capped);
  REQUIRE(high.violations.size() == 1);
  CHECK(high.violations[0].kind == maxekpp::ViolationKind::AboveUpperBound);

  SolverConfig limited;
  limited.max_components = 2;
  const auto many =
      maxekpp::validate_partition(path, Partition::singletons(4), 1, limited);
  REQUIRE(many.violations.size() == 1);
  CHECK(many.violations[0].kind == maxekpp::ViolationKind::TooManyComponents);
  CHECK(many.violations[0].component_label == 0);

  // k comes from the parameter, not from cfg.k.
  SolverConfig k_in_cfg;
  k_in_cfg.k = 5;
  CHECK_FALSE(maxekpp::validate_partition(path, Partition({1, 1, 1, 1}), 1,
                                          k_in_cfg)
                  .feasible());
  CHECK(maxekpp::validate_partition(path, Partition({1, 1, 1, 1}), 3, k_in_cfg)
            .feasible());
}

TEST_CASE("validate_partition respects node weights") {
  WeightedGraph g(3, {{1, 2, 1.0}, {2, 3, 1.0}},
                  std::vector<double>{2.0, 3.0, 4.0});
  SolverConfig cfg;
  cfg.lb = 5.0;
  cfg.ub = 5.0;
  CHECK(maxekpp::validate_partition(g, Partition({1, 1, 2}), 2, cfg)
            .violations.size() == 1);  // component {3} has weight 4 < 5
  CHECK(maxekpp::validate_partition(g, Partition({1, 2, 2}), 2, cfg)
            .violations.size() == 2);  // {1} below, {2,3} above
}

TEST_CASE("spurious components need two nodes and no edges") {
  const WeightedGraph g(5, {{1, 2, 1.0}, {3, 4, 0.0}});
  CHECK(maxekpp::spurious_components(g, Partition({1, 1, 2, 2, 3})).empty());
  // {1,3} spans no edge; singleton {5} never counts.
  const auto sp = maxekpp::spurious_components(g, Partition({1, 2, 1, 2, 3}));
  CHECK(sp == std::vector<int>{1, 2});
  CHECK(maxekpp::spurious_components(g, Partition::singletons(5)).empty());
}

TEST_CASE("prop1 detection") {
  // Cycle on 8 nodes: min degree 2, so one component is feasible iff
  // k >= 6; with nonnegative weights that single component is optimal.
  const auto cyc = testsupport::cycle_graph(8, 2.0);
  CHECK_FALSE(maxekpp::prop1_applies(cyc, 5));
  CHECK(maxekpp::prop1_applies(cyc, 6));
  CHECK(maxekpp::prop1_applies(cyc, 7));

  const auto k4 = testsupport::complete_graph(4, 3.0);
  CHECK(maxekpp::prop1_applies(k4, 1));

  WeightedGraph negative(3, {{1, 2, -1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
  CHECK_FALSE(maxekpp::prop1_applies(negative, 3));

  WeightedGraph edgeless(3, {});
  CHECK_FALSE(maxekpp::prop1_applies(edgeless, 2));
  CHECK(maxekpp::prop1_applies(edgeless, 3));
}

TEST_CASE("partition stats") {
  WeightedGraph g(5, {{1, 2, 4.0}, {2, 3, 1.0}, {4, 5, -2.0}});
  const auto stats = maxekpp::partition_stats(g, Partition({1, 1, 2, 3, 3}));
  CHECK(stats.comp == 3);
  CHECK(stats.largest == 2);
  CHECK(stats.singlt == doctest::Approx(20.0));
  CHECK(stats.weight == 2.0);

  const auto all = maxekpp::partition_stats(g, Partition::single_component(5));
  CHECK(all.comp == 1);
  CHECK(all.largest == 5);
  CHECK(all.singlt == 0.0);
  CHECK(all.weight == 3.0);

  const auto singles = maxekpp::partition_stats(g, Partition::singletons(5));
  CHECK(singles.singlt == 100.0);
  CHECK(singles.weight == 0.0);
}
