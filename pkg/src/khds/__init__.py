"""Minimum k-hop dominating sets on trees, unicyclic graphs, and cacti,
with the circular-arc piercing machinery behind the cycle solvers."""

from .cactus import DfsState, RewritePlan, dfs_based, solve_cactus, \
    solve_special_unicycle
from .errors import KhdsError
from .generators import GenSpec, SplitMix64, gen_arcs, gen_cactus, \
    gen_tree, gen_unicyclic, splitmix64_stream
from .graph import (
    CycleDecomposition,
    DominatingSet,
    Graph,
    GraphClass,
    VerifyResult,
    bfs_forest,
    classify,
    extract_cycle,
    format_graph,
    graph_from_edges,
    multi_source_distances,
    parse_graph,
    verify_khds,
)
from .piercing import (
    Arc,
    ArcInstance,
    CircularDomain,
    PiercingSet,
    compute_next,
    format_arcs,
    normalize_arcs,
    parse_arcs,
    pierce_arcs,
    pierce_arcs_anchored,
    pierce_arcs_reduced,
    pierce_segments,
)
from .tree import TreeSolveResult, partial_domination_number, solve_tree
from .unicyclic import (
    solve_unicyclic,
    solve_unicyclic_anchored,
    solve_unicyclic_quadratic,
    solve_unicyclic_reduced,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcInstance",
    "CircularDomain",
    "CycleDecomposition",
    "DfsState",
    "DominatingSet",
    "GenSpec",
    "Graph",
    "GraphClass",
    "KhdsError",
    "PiercingSet",
    "RewritePlan",
    "SplitMix64",
    "TreeSolveResult",
    "VerifyResult",
    "bfs_forest",
    "classify",
    "compute_next",
    "dfs_based",
    "extract_cycle",
    "format_arcs",
    "format_graph",
    "gen_arcs",
    "gen_cactus",
    "gen_tree",
    "gen_unicyclic",
    "graph_from_edges",
    "multi_source_distances",
    "normalize_arcs",
    "parse_arcs",
    "parse_graph",
    "partial_domination_number",
    "pierce_arcs",
    "pierce_arcs_anchored",
    "pierce_arcs_reduced",
    "pierce_segments",
    "solve_cactus",
    "solve_special_unicycle",
    "solve_tree",
    "solve_unicyclic",
    "solve_unicyclic_anchored",
    "solve_unicyclic_quadratic",
    "solve_unicyclic_reduced",
    "splitmix64_stream",
    "verify_khds",
    "__version__",
]
