#pragma once

#include <cstdint>
#include <vector>

#include "maxekpp/ilp_model.hpp"
#include "maxekpp/partition.hpp"

namespace maxekpp {

/// Bit b of an assignment is the value of variables()[b].
using ModelAssignment = std::uint32_t;

/// All feasible 0/1 assignments of the model, in ascending bit-mask order,
/// truncated to at most `cap` entries (0 means unlimited). Exhaustive
/// sweep; throws std::invalid_argument when the model has more than 25
/// variables.
std::vector<ModelAssignment> enumerate_model_solutions(const IlpModel& m,
                                                       std::size_t cap = 0);

bool assignment_feasible(const IlpModel& m, ModelAssignment a);

double assignment_objective(const IlpModel& m, ModelAssignment a);

/// Partition induced by the selected pair variables: nodes i and j share a
/// component iff they are connected through pairs whose variable is 1.
/// NodeComp variables are ignored. Returned in canonical labeling.
Partition assignment_to_partition(const IlpModel& m, ModelAssignment a);

}  // namespace maxekpp
