#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "maxekpp/graph_io.hpp"
#include "maxekpp/kplex.hpp"
#include "maxekpp/lp_export.hpp"
#include "maxekpp/model_builders.hpp"
#include "maxekpp/model_enumeration.hpp"
#include "maxekpp/partition.hpp"
#include "maxekpp/solver.hpp"

namespace py = pybind11;
using namespace maxekpp;

namespace {

WeightedGraph make_graph(int n,
                         const std::vector<std::tuple<int, int, double>>& edges,
                         std::optional<std::vector<double>> node_weights) {
  std::vector<WeightedEdge> converted;
  converted.reserve(edges.size());
  for (const auto& [i, j, w] : edges) converted.push_back({i, j, w});
  return WeightedGraph(n, std::move(converted), std::move(node_weights));
}

SolverConfig make_config(int k, std::optional<double> time_limit_s,
                         std::optional<double> lb, std::optional<double> ub,
                         std::optional<int> max_components, bool deterministic,
                         int worker_count) {
  SolverConfig cfg;
  cfg.k = k;
  cfg.time_limit_s = time_limit_s;
  cfg.lb = lb;
  cfg.ub = ub;
  cfg.max_components = max_components;
  cfg.deterministic = deterministic;
  cfg.worker_count = worker_count;
  validate_config(cfg);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact solver and ILP models for maximum edge-weight k-plex "
            "partitioning";

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init(&make_graph), py::arg("node_count"), py::arg("edges"),
           py::arg("node_weights") = std::nullopt)
      .def_property_readonly("node_count", &WeightedGraph::node_count)
      .def_property_readonly("edge_count", &WeightedGraph::edge_count)
      .def("edges",
           [](const WeightedGraph& g) {
             std::vector<std::tuple<int, int, double>> out;
             for (const auto& e : g.edges())
               out.emplace_back(e.first, e.second, e.weight);
             return out;
           })
      .def("node_weight", &WeightedGraph::node_weight, py::arg("node"))
      .def("adjacent", &WeightedGraph::adjacent, py::arg("u"), py::arg("v"))
      .def("degree", &WeightedGraph::degree, py::arg("node"))
      .def("min_degree", &WeightedGraph::min_degree)
      .def("density", &WeightedGraph::density)
      .def("total_edge_weight", &WeightedGraph::total_edge_weight)
      .def("complement_edges",
           [](const WeightedGraph& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& p : g.complement_edges())
               out.emplace_back(p.first, p.second);
             return out;
           })
      .def("with_pullan_weights", &WeightedGraph::with_pullan_weights)
      .def("with_unit_weights", &WeightedGraph::with_unit_weights);

  m.def("parse_dimacs", [](const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
  });
  m.def("parse_weighted_edge_list", [](const std::string& text) {
    std::istringstream in(text);
    return parse_weighted_edge_list(in);
  });
  m.def("load_graph_file",
        [](const std::string& path) { return load_graph_file(path); });

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<int>>(), py::arg("labels"))
      .def_property_readonly("labels", &Partition::labels)
      .def("label", &Partition::label, py::arg("node"))
      .def("component_count", &Partition::component_count)
      .def("components", &Partition::components)
      .def("canonicalized", &Partition::canonicalized)
      .def("is_canonical", &Partition::is_canonical)
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; });

  py::class_<PartitionStats>(m, "PartitionStats")
      .def_readonly("comp", &PartitionStats::comp)
      .def_readonly("largest", &PartitionStats::largest)
      .def_readonly("singlt", &PartitionStats::singlt)
      .def_readonly("weight", &PartitionStats::weight);

  m.def("is_kplex", &is_kplex, py::arg("graph"), py::arg("members"),
        py::arg("k"));
  m.def("partition_weight", &partition_weight);
  m.def("partition_stats", &partition_stats);
  m.def("spurious_components", &spurious_components);
  m.def("prop1_applies", &prop1_applies, py::arg("graph"), py::arg("k"));
  m.def(
      "validate_partition",
      [](const WeightedGraph& g, const Partition& p, int k,
         std::optional<double> lb, std::optional<double> ub,
         std::optional<int> max_components) {
        SolverConfig cfg;
        cfg.k = std::max(k, 1);
        cfg.lb = lb;
        cfg.ub = ub;
        cfg.max_components = max_components;
        const auto report = validate_partition(g, p, k, cfg);
        std::vector<std::string> out;
        for (const auto& v : report.violations) out.push_back(v.detail);
        return py::make_tuple(report.feasible(), out);
      },
      py::arg("graph"), py::arg("partition"), py::arg("k"),
      py::arg("lb") = std::nullopt, py::arg("ub") = std::nullopt,
      py::arg("max_components") = std::nullopt);

  py::enum_<SolveStatus>(m, "SolveStatus")
      .value("OPTIMAL", SolveStatus::Optimal)
      .value("FEASIBLE", SolveStatus::Feasible)
      .value("INFEASIBLE", SolveStatus::Infeasible)
      .value("TIMEOUT", SolveStatus::Timeout);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("status", &SolveResult::status)
      .def_readonly("incumbent_value", &SolveResult::incumbent_value)
      .def_readonly("best_bound", &SolveResult::best_bound)
      .def_readonly("d_gap", &SolveResult::d_gap)
      .def_readonly("d_gap_absolute", &SolveResult::d_gap_absolute)
      .def_readonly("partition", &SolveResult::partition)
      .def_readonly("nodes_explored", &SolveResult::nodes_explored)
      .def_readonly("elapsed_s", &SolveResult::elapsed_s);

  const auto solve_wrapper = [](const WeightedGraph& g, int k,
                                std::optional<double> time_limit_s,
                                std::optional<double> lb,
                                std::optional<double> ub,
                                std::optional<int> max_components,
                                bool deterministic, int worker_count) {
    return solve_exact(g, make_config(k, time_limit_s, lb, ub, max_components,
                                      deterministic, worker_count));
  };
  m.def("solve_exact", solve_wrapper, py::arg("graph"), py::arg("k") = 1,
        py::arg("time_limit_s") = std::nullopt, py::arg("lb") = std::nullopt,
        py::arg("ub") = std::nullopt, py::arg("max_components") = std::nullopt,
        py::arg("deterministic") = true, py::arg("worker_count") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "brute_force_optimum",
      [](const WeightedGraph& g, int k, std::optional<double> lb,
         std::optional<double> ub, std::optional<int> max_components) {
        return brute_force_optimum(
            g, make_config(k, std::nullopt, lb, ub, max_components, true, 1));
      },
      py::arg("graph"), py::arg("k") = 1, py::arg("lb") = std::nullopt,
      py::arg("ub") = std::nullopt, py::arg("max_components") = std::nullopt);
  m.def(
      "greedy_warm_start",
      [](const WeightedGraph& g, int k, std::optional<double> lb,
         std::optional<double> ub, std::optional<int> max_components) {
        return greedy_warm_start(
            g, make_config(k, std::nullopt, lb, ub, max_components, true, 1));
      },
      py::arg("graph"), py::arg("k") = 1, py::arg("lb") = std::nullopt,
      py::arg("ub") = std::nullopt, py::arg("max_components") = std::nullopt);

  py::enum_<VarKind>(m, "VarKind")
      .value("EDGE_X", VarKind::EdgeX)
      .value("MISSING_V", VarKind::MissingV)
      .value("NODECOMP_Z", VarKind::NodeComp);

  py::class_<ModelVariable>(m, "ModelVariable")
      .def_readonly("id", &ModelVariable::id)
      .def_readonly("kind", &ModelVariable::kind)
      .def_readonly("i", &ModelVariable::i)
      .def_readonly("j", &ModelVariable::j)
      .def("name", &ModelVariable::name);

  py::class_<IlpModel>(m, "IlpModel")
      .def_property_readonly("n", &IlpModel::n)
      .def_property_readonly("k", &IlpModel::k)
      .def_property_readonly(
          "family", [](const IlpModel& m_) { return to_string(m_.family()); })
      .def_property_readonly("variables", &IlpModel::variables)
      .def_property_readonly("constraint_count",
                             [](const IlpModel& m_) {
                               return model_dimensions(m_).constraint_count;
                             })
      .def_property_readonly("variable_count",
                             [](const IlpModel& m_) {
                               return model_dimensions(m_).variable_count;
                             })
      .def_readonly("generated_constraint_count",
                    &IlpModel::generated_constraint_count)
      .def("pair_variable", &IlpModel::pair_variable, py::arg("i"), py::arg("j"));

  m.def("build_f1c", &build_complete_clique_model, py::arg("graph"));
  m.def("build_f1s", &build_sparse_clique_model, py::arg("graph"));
  m.def("build_fks", &build_kplex_model, py::arg("graph"), py::arg("k"),
        py::arg("reduce") = true);
  m.def("add_capacity_bounds", &add_capacity_bounds, py::arg("model"),
        py::arg("graph"), py::arg("lb") = std::nullopt,
        py::arg("ub") = std::nullopt);
  m.def("add_component_limit", &add_component_limit, py::arg("model"),
        py::arg("graph"), py::arg("P"));
  m.def("export_lp", &export_lp_string, py::arg("model"));
  m.def("enumerate_model_solutions", &enumerate_model_solutions,
        py::arg("model"), py::arg("cap") = 0);
  m.def("assignment_to_partition", &assignment_to_partition, py::arg("model"),
        py::arg("assignment"));
}
