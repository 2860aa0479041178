#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "maxekpp/graph_io.hpp"
#include "maxekpp/kplex.hpp"
#include "maxekpp/lp_export.hpp"
#include "maxekpp/model_builders.hpp"
#include "maxekpp/report.hpp"
#include "maxekpp/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

std::string instance_name(const std::string& path) {
  std::string name = path;
  if (const auto slash = name.find_last_of("/\\"); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (const auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0)
    name = name.substr(0, dot);
  return name;
}

maxekpp::WeightedGraph load_with_weights(const std::string& path,
                                         const std::string& weights) {
  maxekpp::ParseDiagnostics diag;
  maxekpp::WeightedGraph g = maxekpp::load_graph_file(path, &diag);
  for (const auto& warning : diag.warnings)
    std::cerr << "warning: " << path << ": " << warning << '\n';
  if (weights == "pullan") return g.with_pullan_weights();
  if (weights == "unit") return g.with_unit_weights();
  return g;
}

int exit_code_for(maxekpp::SolveStatus status) {
  switch (status) {
    case maxekpp::SolveStatus::Optimal:
    case maxekpp::SolveStatus::Feasible:
      return kExitOk;
    case maxekpp::SolveStatus::Infeasible:
      return kExitInfeasible;
    case maxekpp::SolveStatus::Timeout:
      return kExitTimeout;
  }
  return kExitUsage;
}

void write_outputs(const maxekpp::RunReport& report,
                   const std::string& json_path,
                   const std::string& partition_path) {
  maxekpp::write_report_table(std::cout, report);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << maxekpp::report_to_json(report);
  }
  if (!partition_path.empty() && report.partition) {
    std::ofstream out(partition_path);
    if (!out) throw std::runtime_error("cannot write " + partition_path);
    maxekpp::write_partition(out, *report.partition);
  }
}

struct SolveArgs {
  std::string file;
  std::string weights = "file";
  int k = 1;
  std::optional<double> lb;
  std::optional<double> ub;
  std::optional<int> max_components;
  std::optional<double> time_limit;
  int workers = 1;
  bool fast = false;
  std::uint64_t progress = 0;
  std::string json_path;
  std::string partition_path;
};

void add_common_solve_options(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("file", args.file, "graph file (DIMACS or weighted edge list)")
      ->required();
  cmd->add_option("--k", args.k, "k-plex parameter")->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--weights", args.weights,
                  "edge weights: file (as parsed), pullan, or unit")
      ->check(CLI::IsMember({"file", "pullan", "unit"}));
  cmd->add_option("--lb", args.lb, "minimum node-weight sum per component");
  cmd->add_option("--ub", args.ub, "maximum node-weight sum per component");
  cmd->add_option("--max-components", args.max_components,
                  "maximum number of components");
}

maxekpp::SolverConfig config_from(const SolveArgs& args) {
  maxekpp::SolverConfig cfg;
  cfg.k = args.k;
  cfg.lb = args.lb;
  cfg.ub = args.ub;
  cfg.max_components = args.max_components;
  cfg.time_limit_s = args.time_limit;
  cfg.worker_count = args.workers;
  cfg.deterministic = !args.fast;
  cfg.progress_node_interval = args.progress;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and ILP model builder for maximum edge-weight "
               "k-plex partitioning"};
  app.require_subcommand(1);

  std::string stats_file;
  auto* stats_cmd = app.add_subcommand("stats", "print instance summary");
  stats_cmd->add_option("file", stats_file, "graph file")->required();

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "run the exact search");
  add_common_solve_options(solve_cmd, solve_args);
  solve_cmd->add_option("--time-limit", solve_args.time_limit,
                        "time limit in seconds");
  solve_cmd->add_option("--workers", solve_args.workers, "parallel workers")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--fast", solve_args.fast,
                      "weighted-degree node order and warm start; the value "
                      "stays exact, the reported co-optimum may differ");
  solve_cmd->add_option("--progress", solve_args.progress,
                        "stderr progress line every N search nodes");
  solve_cmd->add_option("--json", solve_args.json_path, "write a JSON report");
  solve_cmd->add_option("--partition-out", solve_args.partition_path,
                        "write the partition as '<node> <label>' lines");

  SolveArgs oracle_args;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive reference search (n <= 12)");
  add_common_solve_options(oracle_cmd, oracle_args);
  oracle_cmd->add_option("--json", oracle_args.json_path, "write a JSON report");
  oracle_cmd->add_option("--partition-out", oracle_args.partition_path,
                         "write the partition as '<node> <label>' lines");

  struct {
    std::string file;
    std::string weights = "file";
    std::string family;
    int k = 1;
    bool no_reduce = false;
    std::optional<double> lb;
    std::optional<double> ub;
    std::optional<int> max_components;
    std::string output;
  } export_args;
  auto* export_cmd = app.add_subcommand("export-model", "write an LP file");
  export_cmd->add_option("file", export_args.file, "graph file")->required();
  export_cmd->add_option("--family", export_args.family, "f1c, f1s, or fks")
      ->required()
      ->check(CLI::IsMember({"f1c", "f1s", "fks"}));
  export_cmd->add_option("--k", export_args.k, "k-plex parameter (fks only)")
      ->check(CLI::PositiveNumber);
  export_cmd->add_flag("--no-reduce", export_args.no_reduce,
                       "keep rows the k = 2 reduction would drop");
  export_cmd->add_option("--weights", export_args.weights,
                         "edge weights: file, pullan, or unit")
      ->check(CLI::IsMember({"file", "pullan", "unit"}));
  export_cmd->add_option("--lb", export_args.lb, "capacity lower bound");
  export_cmd->add_option("--ub", export_args.ub, "capacity upper bound");
  export_cmd->add_option("--max-components", export_args.max_components,
                         "component limit");
  export_cmd->add_option("-o,--output", export_args.output, "output LP path")
      ->required();

  struct {
    std::string file;
    std::string weights = "file";
    std::string partition_file;
    int k = 1;
    std::optional<double> lb;
    std::optional<double> ub;
    std::optional<int> max_components;
  } validate_args;
  auto* validate_cmd =
      app.add_subcommand("validate", "check a partition against a graph");
  validate_cmd->add_option("file", validate_args.file, "graph file")->required();
  validate_cmd->add_option("--partition", validate_args.partition_file,
                           "partition file with '<node> <label>' lines")
      ->required();
  validate_cmd->add_option("--k", validate_args.k, "k-plex parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  validate_cmd->add_option("--weights", validate_args.weights,
                           "edge weights: file, pullan, or unit")
      ->check(CLI::IsMember({"file", "pullan", "unit"}));
  validate_cmd->add_option("--lb", validate_args.lb, "capacity lower bound");
  validate_cmd->add_option("--ub", validate_args.ub, "capacity upper bound");
  validate_cmd->add_option("--max-components", validate_args.max_components,
                           "component limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*stats_cmd) {
      const auto g = load_with_weights(stats_file, "file");
      std::cout << std::left << std::setw(20) << "instance" << ' '
                << std::setw(5) << "n" << ' ' << std::setw(7) << "edges" << ' '
                << std::setw(8) << "d" << ' ' << std::setw(8) << "min_deg"
                << ' ' << std::setw(10) << "total_w" << '\n';
      std::cout << std::left << std::setw(20) << instance_name(stats_file)
                << ' ' << std::setw(5) << g.node_count() << ' ' << std::setw(7)
                << g.edge_count() << ' ' << std::setw(8) << std::fixed
                << std::setprecision(5)
                << (g.node_count() >= 2 ? g.density() : 0.0) << ' '
                << std::setw(8) << g.min_degree() << ' ' << std::setw(10)
                << std::setprecision(2) << g.total_edge_weight() << '\n';
      return kExitOk;
    }

    if (*solve_cmd) {
      const auto g = load_with_weights(solve_args.file, solve_args.weights);
      const auto cfg = config_from(solve_args);
      const auto result = maxekpp::solve_exact(g, cfg);
      const auto report = maxekpp::make_run_report(
          instance_name(solve_args.file), g, cfg, result);
      write_outputs(report, solve_args.json_path, solve_args.partition_path);
      return exit_code_for(result.status);
    }

    if (*oracle_cmd) {
      const auto g = load_with_weights(oracle_args.file, oracle_args.weights);
      const auto cfg = config_from(oracle_args);
      const auto result = maxekpp::brute_force_optimum(g, cfg);
      const auto report = maxekpp::make_run_report(
          instance_name(oracle_args.file), g, cfg, result);
      write_outputs(report, oracle_args.json_path, oracle_args.partition_path);
      return exit_code_for(result.status);
    }

    if (*export_cmd) {
      const auto g = load_with_weights(export_args.file, export_args.weights);
      const auto family = maxekpp::parse_model_family(export_args.family);
      maxekpp::IlpModel model = [&] {
        switch (*family) {
          case maxekpp::ModelFamily::F1c:
            if (export_args.k != 1)
              throw std::invalid_argument("family f1c is a k = 1 model");
            return maxekpp::build_complete_clique_model(g);
          case maxekpp::ModelFamily::F1s:
            if (export_args.k != 1)
              throw std::invalid_argument("family f1s is a k = 1 model");
            return maxekpp::build_sparse_clique_model(g);
          case maxekpp::ModelFamily::Fks:
          default:
            return maxekpp::build_kplex_model(g, export_args.k,
                                              !export_args.no_reduce);
        }
      }();
      if (export_args.lb || export_args.ub)
        model = maxekpp::add_capacity_bounds(model, g, export_args.lb,
                                             export_args.ub);
      if (export_args.max_components)
        model = maxekpp::add_component_limit(model, g,
                                             *export_args.max_components);
      std::ofstream out(export_args.output, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + export_args.output);
      maxekpp::export_lp(out, model);
      const auto dims = maxekpp::model_dimensions(model);
      std::cerr << export_args.output << ": " << dims.variable_count
                << " variables, " << dims.constraint_count << " constraints\n";
      return kExitOk;
    }

    if (*validate_cmd) {
      const auto g =
          load_with_weights(validate_args.file, validate_args.weights);
      std::ifstream pin(validate_args.partition_file);
      if (!pin)
        throw std::runtime_error("cannot open " + validate_args.partition_file);
      const auto partition = maxekpp::parse_partition(pin, g.node_count());
      maxekpp::SolverConfig cfg;
      cfg.k = validate_args.k;
      cfg.lb = validate_args.lb;
      cfg.ub = validate_args.ub;
      cfg.max_components = validate_args.max_components;
      const auto report =
          maxekpp::validate_partition(g, partition, validate_args.k, cfg);
      if (report.feasible()) {
        const auto stats = maxekpp::partition_stats(g, partition);
        std::cout << "feasible: weight=" << stats.weight
                  << " comp=" << stats.comp << " largest=" << stats.largest
                  << " singlt=" << stats.singlt << "%\n";
        return kExitOk;
      }
      for (const auto& v : report.violations) {
        switch (v.kind) {
          case maxekpp::ViolationKind::NotKPlex:
            std::cout << "component " << v.component_label << ": not a "
                      << validate_args.k << "-plex (" << v.detail << ")\n";
            break;
          case maxekpp::ViolationKind::BelowLowerBound:
          case maxekpp::ViolationKind::AboveUpperBound:
            std::cout << "component " << v.component_label << ": " << v.detail
                      << "\n";
            break;
          case maxekpp::ViolationKind::TooManyComponents:
            std::cout << "partition: " << v.detail << "\n";
            break;
        }
      }
      return kExitInfeasible;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
