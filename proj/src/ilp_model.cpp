#include "maxekpp/ilp_model.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace maxekpp {

std::string to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::F1c: return "f1c";
    case ModelFamily::F1s: return "f1s";
    case ModelFamily::Fks: return "fks";
  }
  throw std::logic_error("unknown model family");
}

std::optional<ModelFamily> parse_model_family(const std::string& text) {
  if (text == "f1c") return ModelFamily::F1c;
  if (text == "f1s") return ModelFamily::F1s;
  if (text == "fks") return ModelFamily::Fks;
  return std::nullopt;
}

std::string ModelVariable::name() const {
  const char* prefix = kind == VarKind::EdgeX     ? "x_"
                       : kind == VarKind::MissingV ? "v_"
                                                   : "z_";
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

IlpModel::IlpModel(int n, int k, ModelFamily family)
    : n_(n), k_(k), family_(family) {
  if (n < 1) throw std::invalid_argument("model needs n >= 1");
  if (k < 1) throw std::invalid_argument("model needs k >= 1");
  pair_var_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, -1);
}

int IlpModel::pair_index(int i, int j) const {
  if (i < 1 || j <= i || j > n_)
    throw std::out_of_range("pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") invalid for n=" +
                            std::to_string(n_));
  // Pairs (i,j), i<j, in lexicographic order.
  return (i - 1) * n_ - i * (i + 1) / 2 + j - 1;
}

int IlpModel::pair_variable(int i, int j) const {
  if (i > j) std::swap(i, j);
  return pair_var_[pair_index(i, j)];
}

int IlpModel::node_component_variable(int i, int p) const {
  if (slots_ == 0) return -1;
  if (i < 1 || i > n_ || p < 1 || p > slots_) return -1;
  return node_comp_var_[static_cast<std::size_t>(i - 1) * slots_ + (p - 1)];
}

int IlpModel::add_pair_variable(VarKind kind, int i, int j) {
  if (kind == VarKind::NodeComp)
    throw std::invalid_argument("pair variable cannot be NodeComp");
  if (i > j) std::swap(i, j);
  int& slot = pair_var_[pair_index(i, j)];
  if (slot != -1)
    throw std::invalid_argument("pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ") already has a variable");
  const int id = static_cast<int>(variables_.size());
  variables_.push_back({id, kind, i, j});
  slot = id;
  return id;
}

int IlpModel::add_node_component_variable(int i, int p) {
  if (i < 1 || i > n_ || p < 1)
    throw std::out_of_range("node-component variable out of range");
  if (slots_ == 0) {
    if (!max_components)
      throw std::logic_error("set max_components before adding z variables");
    slots_ = *max_components;
    node_comp_var_.assign(static_cast<std::size_t>(n_) * slots_, -1);
  }
  if (p > slots_) throw std::out_of_range("component slot out of range");
  int& slot = node_comp_var_[static_cast<std::size_t>(i - 1) * slots_ + (p - 1)];
  if (slot != -1) throw std::invalid_argument("z variable already present");
  const int id = static_cast<int>(variables_.size());
  variables_.push_back({id, VarKind::NodeComp, i, p});
  slot = id;
  return id;
}

void IlpModel::add_objective_term(int var, double coeff) {
  if (var < 0 || var >= static_cast<int>(variables_.size()))
    throw std::out_of_range("objective references unknown variable");
  objective_.push_back({var, coeff});
}

void IlpModel::add_constraint(LinearConstraint c) {
  for (const auto& term : c.terms)
    if (term.var < 0 || term.var >= static_cast<int>(variables_.size()))
      throw std::out_of_range("constraint references unknown variable");
  constraints_.push_back(std::move(c));
  ++generated_constraint_count;
}

ModelDimensions model_dimensions(const IlpModel& m) {
  return {static_cast<int>(m.variables().size()),
          static_cast<int>(m.constraints().size())};
}

}  // namespace maxekpp
