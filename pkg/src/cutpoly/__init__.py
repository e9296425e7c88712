"""Vertices, adjacency, diameter and clique number of the cut polytope's 1-skeleton."""

from .analysis import Coloring, CliqueResult, Metrics, clique_number, diameter, metrics, verify_clique, verify_coloring
from .constructions import (
    BinaryMatrix,
    BoundsRow,
    CliqueFamily,
    bounds_for,
    brm,
    brm_coloring,
    brm_star,
    brm_star_coloring,
    hamming_ball_clique,
    symmetric_cut_clique,
)
from .graph import Cut, Graph, GraphClass, classify, components, cut_set, format_graph, parse_graph, sym_diff
from .skeleton import (
    AdjacencyCertificate,
    NonAdjacencyWitness,
    SkeletonGraph,
    build_skeleton,
    certify_adjacent,
    check_inheritance,
    is_adjacent,
    witness_nonadjacent,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyCertificate",
    "BinaryMatrix",
    "BoundsRow",
    "CliqueFamily",
    "CliqueResult",
    "Coloring",
    "Cut",
    "Graph",
    "GraphClass",
    "Metrics",
    "NonAdjacencyWitness",
    "SkeletonGraph",
    "bounds_for",
    "brm",
    "brm_coloring",
    "brm_star",
    "brm_star_coloring",
    "build_skeleton",
    "certify_adjacent",
    "check_inheritance",
    "classify",
    "clique_number",
    "components",
    "cut_set",
    "diameter",
    "format_graph",
    "hamming_ball_clique",
    "is_adjacent",
    "metrics",
    "parse_graph",
    "sym_diff",
    "symmetric_cut_clique",
    "verify_clique",
    "verify_coloring",
    "witness_nonadjacent",
]
