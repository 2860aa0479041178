#pragma once

#include <optional>
#include <string>
#include <vector>

namespace maxekpp {

enum class VarKind {
  EdgeX,     // pair in E: 1 iff both endpoints share a component
  MissingV,  // pair not in E: same meaning, used by the k-plex models
  NodeComp,  // node-to-component-slot indicator for the component limit
};

enum class ConstraintSense { LessEqual, GreaterEqual, Equal };

enum class ModelFamily { F1c, F1s, Fks };

std::string to_string(ModelFamily family);
std::optional<ModelFamily> parse_model_family(const std::string& text);

struct ModelVariable {
  int id = 0;
  VarKind kind = VarKind::EdgeX;
  /// Node pair (i < j) for EdgeX/MissingV; node and component slot
  /// (1-based) for NodeComp.
  int i = 0;
  int j = 0;

  std::string name() const;  // x_i_j, v_i_j, z_i_p
};

struct LinearTerm {
  int var = 0;
  double coeff = 0.0;
};

struct LinearConstraint {
  std::vector<LinearTerm> terms;
  ConstraintSense sense = ConstraintSense::LessEqual;
  double rhs = 0.0;
  /// Constraint-family tag carried into LP exports, e.g. "(10)".
  std::string tag;
};

/// A 0/1 maximization program over pair and node-component variables.
/// Construction order is deterministic, so identical inputs give
/// byte-identical exports. Treated as immutable once built; the add_*
/// operations in model_builders.hpp copy and extend.
class IlpModel {
 public:
  IlpModel(int n, int k, ModelFamily family);

  int n() const { return n_; }
  int k() const { return k_; }
  ModelFamily family() const { return family_; }
  bool pair_model() const { return family_ != ModelFamily::F1c; }

  const std::vector<ModelVariable>& variables() const { return variables_; }
  /// Objective terms (maximize); references EdgeX variables only.
  const std::vector<LinearTerm>& objective() const { return objective_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  /// Variable id of the EdgeX or MissingV variable on pair (i,j); -1 when
  /// the model carries no variable for that pair.
  int pair_variable(int i, int j) const;
  /// Variable id of z_{i,p}; -1 when absent.
  int node_component_variable(int i, int p) const;

  std::optional<double> lb;
  std::optional<double> ub;
  std::optional<int> max_components;
  /// True when the k = 2 redundancy reduction was applied.
  bool reduced = false;
  /// Rows generated before dropping vacuous ones (empty left-hand sides).
  int generated_constraint_count = 0;

  // Builder interface; keeps ids, lookup tables and counts consistent.
  int add_pair_variable(VarKind kind, int i, int j);
  int add_node_component_variable(int i, int p);
  void add_objective_term(int var, double coeff);
  void add_constraint(LinearConstraint c);
  /// Counts a row that was generated but dropped as vacuous.
  void note_dropped_constraint() { ++generated_constraint_count; }

 private:
  int pair_index(int i, int j) const;

  int n_;
  int k_;
  ModelFamily family_;
  std::vector<ModelVariable> variables_;
  std::vector<LinearTerm> objective_;
  std::vector<LinearConstraint> constraints_;
  std::vector<int> pair_var_;  // triangular pair index -> var id or -1
  std::vector<int> node_comp_var_;
  int slots_ = 0;  // component slots when NodeComp variables exist
};

struct ModelDimensions {
  int variable_count = 0;
  int constraint_count = 0;
};

ModelDimensions model_dimensions(const IlpModel& m);

}  // namespace maxekpp
