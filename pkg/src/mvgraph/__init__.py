"""Solvers, generators and a benchmark harness for the graph
mutual-visibility problem."""

from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    average_distance,
    from_edge_list,
    is_connected,
    leaves,
    max_degree,
)
from .kernels import BACKEND
from .visibility import (
    ViolationReport,
    clique_lower_bound,
    degree_lower_bound,
    hypergraph_bound,
    is_mv_set,
    violations,
    x_visible,
)
from .solvers import (
    GaParams,
    Hypergraph,
    SolveResult,
    build_hypergraph,
    exact_mu,
    ga_fitness,
    ga_solve,
    greedy_independent_set,
    hypergraph_solve,
    random_sampling,
    repair,
)
from .generators import (
    GraphClass,
    GraphClassSpec,
    Instance,
    KnownMu,
    MuKind,
    build_suite,
    generate,
    known_mu,
    mycielskian,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DistanceMatrix",
    "GaParams",
    "Graph",
    "GraphClass",
    "GraphClassSpec",
    "Hypergraph",
    "Instance",
    "KnownMu",
    "MuKind",
    "SolveResult",
    "UNREACHABLE",
    "ViolationReport",
    "all_pairs_distances",
    "average_distance",
    "build_hypergraph",
    "build_suite",
    "clique_lower_bound",
    "degree_lower_bound",
    "exact_mu",
    "from_edge_list",
    "ga_fitness",
    "ga_solve",
    "generate",
    "greedy_independent_set",
    "hypergraph_bound",
    "hypergraph_solve",
    "is_connected",
    "is_mv_set",
    "known_mu",
    "leaves",
    "max_degree",
    "mycielskian",
    "random_sampling",
    "repair",
    "violations",
    "x_visible",
]
