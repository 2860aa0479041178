#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "maxekpp/model_builders.hpp"
#include "maxekpp/model_enumeration.hpp"
#include "support.hpp"

using namespace maxekpp;

TEST_CASE("enumeration returns ascending masks and honors the cap") {
  const auto g = testsupport::random_graph(5, 60, 51);
  const auto m = build_sparse_clique_model(g);
  const auto all = enumerate_model_solutions(m);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(!all.empty());
  CHECK(all.front() == 0u);  // selecting nothing violates no row

  const auto few = enumerate_model_solutions(m, 3);
  REQUIRE(few.size() == 3);
  CHECK(std::equal(few.begin(), few.end(), all.begin()));

  for (ModelAssignment a : all) CHECK(assignment_feasible(m, a));
  // Everything not listed is infeasible.
  std::size_t feasible = 0;
  for (ModelAssignment a = 0; a < (1u << m.variables().size()); ++a)
    feasible += assignment_feasible(m, a);
  CHECK(feasible == all.size());
}

TEST_CASE("enumeration refuses oversized models") {
  const auto g = testsupport::complete_graph(8);  // 28 pair variables
  CHECK_THROWS_AS(enumerate_model_solutions(build_complete_clique_model(g)),
                  std::invalid_argument);
}

TEST_CASE("objective evaluation sums the selected terms") {
  const WeightedGraph g(4, {{1, 2, 10}, {1, 3, 5}, {2, 3, 20}, {3, 4, 1}});
  const auto m = build_sparse_clique_model(g);
  const auto bit = [&](int i, int j) {
    return ModelAssignment{1} << m.pair_variable(i, j);
  };
  CHECK(assignment_objective(m, 0) == 0.0);
  CHECK(assignment_objective(m, bit(1, 2) | bit(3, 4)) == 11.0);
  CHECK(assignment_objective(m, bit(1, 2) | bit(1, 3) | bit(2, 3)) == 35.0);
}

TEST_CASE("selected pairs induce the partition through connectivity") {
  const WeightedGraph g(5, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}});
  const auto m = build_sparse_clique_model(g);
  const auto bit = [&](int i, int j) {
    return ModelAssignment{1} << m.pair_variable(i, j);
  };
  // The map does not require feasibility: a chain of selected pairs
  // merges transitively.
  const auto p = assignment_to_partition(m, bit(1, 2) | bit(2, 3));
  CHECK(p.labels() == std::vector<int>{1, 1, 1, 2, 3});
  const auto q = assignment_to_partition(m, bit(4, 5));
  CHECK(q.labels() == std::vector<int>{1, 2, 3, 4, 4});
  CHECK(assignment_to_partition(m, 0).labels() ==
        std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("node-component variables do not affect the induced partition") {
  const WeightedGraph g(3, {{1, 2, 1}, {2, 3, 2}});
  const auto m = add_component_limit(build_sparse_clique_model(g), g, 2);
  const auto x12 = ModelAssignment{1} << m.pair_variable(1, 2);
  const auto z31 = ModelAssignment{1} << m.node_component_variable(3, 1);
  CHECK(assignment_to_partition(m, x12 | z31).labels() ==
        std::vector<int>{1, 1, 2});
}
