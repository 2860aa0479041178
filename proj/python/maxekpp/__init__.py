"""Exact solver and ILP models for maximum edge-weight k-plex partitioning."""

from ._core import (
    IlpModel,
    ModelVariable,
    Partition,
    PartitionStats,
    SolveResult,
    SolveStatus,
    VarKind,
    WeightedGraph,
    add_capacity_bounds,
    add_component_limit,
    assignment_to_partition,
    brute_force_optimum,
    build_f1c,
    build_f1s,
    build_fks,
    enumerate_model_solutions,
    export_lp,
    greedy_warm_start,
    is_kplex,
    load_graph_file,
    parse_dimacs,
    parse_weighted_edge_list,
    partition_stats,
    partition_weight,
    prop1_applies,
    solve_exact,
    spurious_components,
    validate_partition,
)

__all__ = [
    "IlpModel",
    "ModelVariable",
    "Partition",
    "PartitionStats",
    "SolveResult",
    "SolveStatus",
    "VarKind",
    "WeightedGraph",
    "add_capacity_bounds",
    "add_component_limit",
    "assignment_to_partition",
    "brute_force_optimum",
    "build_f1c",
    "build_f1s",
    "build_fks",
    "enumerate_model_solutions",
    "export_lp",
    "greedy_warm_start",
    "is_kplex",
    "load_graph_file",
    "parse_dimacs",
    "parse_weighted_edge_list",
    "partition_stats",
    "partition_weight",
    "prop1_applies",
    "solve_exact",
    "spurious_components",
    "validate_partition",
]

__version__ = "0.1.0"
