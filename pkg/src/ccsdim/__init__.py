"""Vertex and edge metric dimension of crystal cubic carbon graphs CCS(n)."""

from .ccs import (
    CcsGraph,
    CountReport,
    CubeRecord,
    canonical_landmarks,
    expected_counts,
    generate_ccs,
    unit_cube_labeling,
)
from .graph import DistanceOracle, Graph, all_pairs, bfs_distances, build_graph, edge_vertex_distance
from .resolve import ResolveVerdict, collision_groups, is_edge_resolving, is_vertex_resolving
from .solver import SolveResult, brute_force_min, build_matrix, solve_exact, solve_greedy

__version__ = "0.1.0"

__all__ = [
    "CcsGraph", "CountReport", "CubeRecord", "canonical_landmarks", "expected_counts",
    "generate_ccs", "unit_cube_labeling", "DistanceOracle", "Graph", "all_pairs",
    "bfs_distances", "build_graph", "edge_vertex_distance", "ResolveVerdict",
    "collision_groups", "is_edge_resolving", "is_vertex_resolving", "SolveResult",
    "brute_force_min", "build_matrix", "solve_exact", "solve_greedy",
]
