#include "maxekpp/model_enumeration.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace maxekpp {

namespace {

double row_activity(const LinearConstraint& c, ModelAssignment a) {
  double lhs = 0.0;
  for (const auto& term : c.terms)
    if ((a >> term.var) & 1) lhs += term.coeff;
  return lhs;
}

}  // namespace

bool assignment_feasible(const IlpModel& m, ModelAssignment a) {
  for (const auto& c : m.constraints()) {
    const double lhs = row_activity(c, a);
    switch (c.sense) {
      case ConstraintSense::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case ConstraintSense::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case ConstraintSense::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

double assignment_objective(const IlpModel& m, ModelAssignment a) {
  double value = 0.0;
  for (const auto& term : m.objective())
    if ((a >> term.var) & 1) value += term.coeff;
  return value;
}

std::vector<ModelAssignment> enumerate_model_solutions(const IlpModel& m,
                                                       std::size_t cap) {
  const int vars = static_cast<int>(m.variables().size());
  if (vars > 25)
    throw std::invalid_argument("exhaustive enumeration limited to 25 "
                                "variables, model has " + std::to_string(vars));
  std::vector<ModelAssignment> out;
  const std::uint64_t end = std::uint64_t{1} << vars;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (!assignment_feasible(m, static_cast<ModelAssignment>(mask))) continue;
    out.push_back(static_cast<ModelAssignment>(mask));
    if (cap != 0 && out.size() >= cap) break;
  }
  return out;
}

Partition assignment_to_partition(const IlpModel& m, ModelAssignment a) {
  std::vector<int> parent(static_cast<std::size_t>(m.n()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& var : m.variables()) {
    if (var.kind == VarKind::NodeComp) continue;
    if ((a >> var.id) & 1) parent[find(var.i)] = find(var.j);
  }
  std::vector<int> labels(static_cast<std::size_t>(m.n()));
  for (int v = 1; v <= m.n(); ++v) labels[v - 1] = find(v);
  return Partition(std::move(labels)).canonicalized();
}

}  // namespace maxekpp
